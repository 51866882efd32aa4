// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/protocol.hpp"

#include <gtest/gtest.h>

#include <random>
#include <numeric>
#include <set>

#include "qss/errors.hpp"
#include "qss/golden.hpp"
#include "qss/rng.hpp"
#include "test_util.hpp"

using namespace qss;
using qss::testing::expect_state_near;
using qss::testing::kInvSqrt2;
using qss::testing::random_state;

namespace {

const std::vector<Qubit> kABC = {Qubit::A, Qubit::B, Qubit::C};
const std::vector<Qubit> kABCE = {Qubit::A, Qubit::B, Qubit::C, Qubit::E};

StateVector ghz() { return state_from_terms(kABC, {{"000", kInvSqrt2}, {"111", kInvSqrt2}}); }

StateVector hadamard_ghz() {
    return state_from_terms(kABC, {{"000", 0.5}, {"011", 0.5}, {"101", 0.5}, {"110", 0.5}});
}

std::string bits2(int a, int b) { return std::string{static_cast<char>('0' + a), static_cast<char>('0' + b)}; }

}  // namespace

TEST(RoundIndex, ParityAndValidation) {
    EXPECT_EQ(RoundIndex(1).parity(), Parity::Odd);
    EXPECT_EQ(RoundIndex(2).parity(), Parity::Even);
    EXPECT_EQ(RoundIndex(7).parity(), Parity::Odd);
    EXPECT_THROW(RoundIndex(0), ConfigError);
}

TEST(DataBits, ParseAndIndex) {
    DataBits bits = DataBits::parse("1011");
    EXPECT_EQ(bits.size(), 4U);
    EXPECT_EQ(bits.at(1), 1);
    EXPECT_EQ(bits.at(2), 0);
    EXPECT_EQ(bits.to_string(), "1011");
    EXPECT_THROW(bits.at(0), ConfigError);
    EXPECT_THROW(bits.at(5), ConfigError);
    EXPECT_THROW(DataBits::parse(""), ConfigError);
    EXPECT_THROW(DataBits::parse("10x"), ConfigError);
}

TEST(InitCarrier, GhzWithOptionalAncilla) {
    expect_state_near(init_carrier(false), ghz());
    expect_state_near(init_carrier(true), state_from_terms(kABCE, {{"0000", kInvSqrt2}, {"1110", kInvSqrt2}}));
    for (bool anc : {false, true}) {
        auto a = marginal_probabilities(init_carrier(anc), {Qubit::A});
        EXPECT_NEAR(a["0"], 0.5, kNormTolerance);
        EXPECT_NEAR(a["1"], 0.5, kNormTolerance);
    }
}

TEST(EncodePair, OddBasisEvenBell) {
    expect_state_near(encode_pair(0, Parity::Odd), new_basis_state({Qubit::S1, Qubit::S2}, "00"));
    expect_state_near(encode_pair(1, Parity::Odd), new_basis_state({Qubit::S1, Qubit::S2}, "11"));
    expect_state_near(encode_pair(1, Parity::Even),
                      state_from_terms({Qubit::S1, Qubit::S2}, {{"01", kInvSqrt2}, {"10", kInvSqrt2}}));
    expect_state_near(encode_pair(0, Parity::Even),
                      state_from_terms({Qubit::S1, Qubit::S2}, {{"00", kInvSqrt2}, {"11", kInvSqrt2}}));
    EXPECT_THROW(encode_pair(2, Parity::Odd), ConfigError);
}

TEST(AliceEntangle, OddRoundOnAttackedCarrier) {
    for (Bit q1 : {Bit{0}, Bit{1}}) {
        for (Bit q : {Bit{0}, Bit{1}}) {
            StateVector joint = alice_entangle(tensor(fixture_carrier_odd(q1), encode_pair(q, Parity::Odd)), Parity::Odd);
            expect_state_near(joint, fixture_round3_entangled(q1, q));
        }
    }
}

TEST(AliceEntangle, EvenRoundFourCnotsLeaveEverythingUnchanged) {
    // Carrier x ancilla in even form: every term has even weight, so the
    // CNOTs from A, E, B, C flip the Bell pair an even number of times.
    for (Bit x : {Bit{0}, Bit{1}}) {
        for (Bit q : {Bit{0}, Bit{1}}) {
            const StateVector start = tensor(fixture_carrier_even(x), encode_pair(q, Parity::Even));
            StateVector s = alice_entangle(start, Parity::Even);
            s = apply_cnot(std::move(s), Qubit::E, Qubit::S1);
            s = charlie_disentangle(bob_disentangle(std::move(s)));
            EXPECT_LE(max_abs_difference(s, start), kExactTolerance) << "x=" << int{x} << " q=" << int{q};
        }
    }
}

TEST(Disentangle, AfterRoundOneEveRecoversOddCarrier) {
    for (Bit q1 : {Bit{0}, Bit{1}}) {
        StateVector s = charlie_disentangle(bob_disentangle(fixture_round1_after_eve(q1)));
        const std::string pair = q1 ? "11" : "00";
        expect_state_near(s, tensor(fixture_carrier_odd(q1), new_basis_state({Qubit::S1, Qubit::S2}, pair)));
    }
}

TEST(Disentangle, HonestRoundOneRestoresGhzTimesPair) {
    // Hand expansion: (|000,q,q> + |111,~q,~q>) -> Bob -> (|000,q,q> + |111,q,~q>)
    // -> Charlie -> (|000> + |111>)|q,q>.
    for (int q : {0, 1}) {
        StateVector pre = state_from_terms({Qubit::A, Qubit::B, Qubit::C, Qubit::S1, Qubit::S2},
                                           {{"000" + bits2(q, q), kInvSqrt2}, {"111" + bits2(1 - q, 1 - q), kInvSqrt2}});
        StateVector post = charlie_disentangle(bob_disentangle(pre));
        expect_state_near(post, tensor(ghz(), new_basis_state({Qubit::S1, Qubit::S2}, bits2(q, q))));
    }
}

TEST(ReceiveAndReconstruct, HonestOddRound) {
    StateVector joint = charlie_disentangle(bob_disentangle(
        alice_entangle(tensor(init_carrier(false), encode_pair(1, Parity::Odd)), Parity::Odd)));
    ReceiveResult rx = receive_and_reconstruct(joint, Parity::Odd, {0.4, 0.9});
    EXPECT_EQ(rx.reception.bob_outcome, 1);
    EXPECT_EQ(rx.reception.charlie_outcome, 1);
    EXPECT_EQ(rx.reception.reconstructed, 1);
    EXPECT_TRUE(rx.reception.consistent);
    expect_state_near(rx.carrier, ghz());
}

TEST(ReceiveAndReconstruct, HonestEvenRoundEnumeratesBothOutcomes) {
    // Enumerate measurement branches via the draws: Bob sees x uniformly,
    // Charlie x ^ q, reconstruction is always q.
    for (Bit q : {Bit{0}, Bit{1}}) {
        std::set<int> bob_seen;
        for (double d0 : {0.1, 0.49, 0.51, 0.9}) {
            for (double d1 : {0.0, 0.5, 0.99}) {
                StateVector joint = charlie_disentangle(bob_disentangle(
                    alice_entangle(tensor(hadamard_ghz(), encode_pair(q, Parity::Even)), Parity::Even)));
                ReceiveResult rx = receive_and_reconstruct(joint, Parity::Even, {d0, d1});
                EXPECT_EQ(rx.reception.charlie_outcome, rx.reception.bob_outcome ^ q);
                EXPECT_EQ(rx.reception.reconstructed, q);
                EXPECT_TRUE(rx.reception.consistent);
                EXPECT_NEAR(rx.bob_measurement.probability, 0.5, kExactTolerance);
                EXPECT_NEAR(rx.charlie_measurement.probability, 1.0, kExactTolerance);
                bob_seen.insert(rx.reception.bob_outcome);
            }
        }
        EXPECT_EQ(bob_seen, (std::set<int>{0, 1}));
    }
}

TEST(ReceiveAndReconstruct, OddRoundUnderAttackIsConsistent) {
    for (Bit q1 : {Bit{0}, Bit{1}}) {
        for (Bit q : {Bit{0}, Bit{1}}) {
            // Eve's net action in odd rounds is C(E->S1) twice, i.e. identity on the joint.
            StateVector joint = charlie_disentangle(bob_disentangle(fixture_round3_entangled(q1, q)));
            ReceiveResult rx = receive_and_reconstruct(joint, Parity::Odd, {0.5, 0.5});
            EXPECT_EQ(rx.reception.bob_outcome, q);
            EXPECT_EQ(rx.reception.charlie_outcome, q);
            EXPECT_TRUE(rx.reception.consistent);
            expect_state_near(rx.carrier, fixture_carrier_odd(q1));
        }
    }
}

TEST(EndRoundHadamards, OddEvenForms) {
    for (Bit q1 : {Bit{0}, Bit{1}}) {
        expect_state_near(end_round_hadamards(fixture_carrier_odd(q1), true), fixture_carrier_even(q1));
        expect_state_near(end_round_hadamards(fixture_carrier_even(q1), true), fixture_carrier_odd(q1));
    }
    expect_state_near(end_round_hadamards(ghz(), false), hadamard_ghz());
}

TEST(EndRoundHadamards, IsAnInvolution) {
    std::mt19937_64 gen(31);
    for (int i = 0; i < 50; ++i) {
        StateVector c3 = random_state(kABC, gen);
        expect_state_near(end_round_hadamards(end_round_hadamards(c3, false), false), c3);
        StateVector c4 = random_state(kABCE, gen);
        expect_state_near(end_round_hadamards(end_round_hadamards(c4, true), true), c4);
    }
}

TEST(ComparisonSubset, SizeAndUniformity) {
    EXPECT_EQ(comparison_size(32, 0.25), 8);
    EXPECT_EQ(comparison_size(16, 0.5), 8);
    EXPECT_EQ(comparison_size(30, 0.1), 3);
    EXPECT_EQ(comparison_size(5, 0.01), 1);
    EXPECT_EQ(comparison_size(7, 1.0), 7);
    EXPECT_THROW(comparison_size(8, 0.0), ConfigError);
    EXPECT_THROW(comparison_size(8, 1.5), ConfigError);

    Rng rng(17);
    std::vector<int> hits(9, 0);
    constexpr int kDraws = 20000;
    for (int i = 0; i < kDraws; ++i) {
        auto idx = choose_comparison_indices(8, 0.25, rng);
        ASSERT_EQ(idx.size(), 2U);
        ASSERT_LT(idx[0], idx[1]);
        for (int k : idx) ++hits[static_cast<std::size_t>(k)];
    }
    // Each index is included with probability 2/8.
    const double sigma = std::sqrt(kDraws * 0.25 * 0.75);
    for (int k = 1; k <= 8; ++k) EXPECT_NEAR(hits[static_cast<std::size_t>(k)], kDraws * 0.25, 4 * sigma);
}

namespace {

// Honest protocol run built directly from the round functions.
std::vector<RoundRecord> honest_run(const DataBits &bits, std::mt19937_64 &gen, bool check_carrier) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<RoundRecord> out;
    StateVector carrier = init_carrier(false);
    for (int k = 1; k <= static_cast<int>(bits.size()); ++k) {
        const RoundIndex r(k);
        if (check_carrier) {
            EXPECT_TRUE(equal_up_to_global_phase(carrier, r.parity() == Parity::Odd ? ghz() : hadamard_ghz(),
                                                 kNormTolerance))
                << "round " << k;
        }
        StateVector joint = alice_entangle(tensor(carrier, encode_pair(bits.at(k), r.parity())), r.parity());
        joint = charlie_disentangle(bob_disentangle(std::move(joint)));
        ReceiveResult rx = receive_and_reconstruct(std::move(joint), r.parity(), {u(gen), u(gen)});
        out.push_back({r, bits.at(k), rx.reception.bob_outcome, rx.reception.charlie_outcome,
                       rx.reception.reconstructed, rx.reception.consistent});
        carrier = end_round_hadamards(std::move(rx.carrier), false);
    }
    return out;
}

}  // namespace

TEST(ProtocolProperties, HonestRunsReconstructEveryBit) {
    std::mt19937_64 gen(8080);
    std::uniform_int_distribution<int> len(1, 14);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Bit> raw(static_cast<std::size_t>(len(gen)));
        for (auto &b : raw) b = static_cast<Bit>(gen() & 1U);
        const DataBits bits(raw);
        auto records = honest_run(bits, gen, true);
        for (const auto &rec : records) {
            EXPECT_EQ(rec.reconstructed, rec.sent);
            EXPECT_TRUE(rec.consistent);
        }
        std::vector<int> all(bits.size());
        std::iota(all.begin(), all.end(), 1);
        EXPECT_FALSE(public_comparison(records, bits, all).detected);
    }
}

TEST(PublicComparison, DetectsCorruptedComparedRecord) {
    std::mt19937_64 gen(1);
    const DataBits bits = DataBits::parse("0110100");
    auto records = honest_run(bits, gen, false);

    std::vector<int> idx = {2, 4};
    DetectionReport clean = public_comparison(records, bits, idx);
    EXPECT_EQ(clean.mismatches, 0);
    EXPECT_FALSE(clean.detected);
    EXPECT_FALSE(clean.any_odd_index_announced);

    records[3].reconstructed ^= 1;  // round 4
    DetectionReport bad = public_comparison(records, bits, idx);
    EXPECT_EQ(bad.mismatches, 1);
    EXPECT_TRUE(bad.detected);

    // Corruption outside the compared set stays invisible.
    std::vector<int> other = {1, 5};
    DetectionReport miss = public_comparison(records, bits, other);
    EXPECT_FALSE(miss.detected);
    EXPECT_TRUE(miss.any_odd_index_announced);

    records[4].consistent = false;  // round 5
    EXPECT_TRUE(public_comparison(records, bits, other).detected);
}

TEST(PublicComparison, RejectsBadIndices) {
    std::mt19937_64 gen(2);
    const DataBits bits = DataBits::parse("01");
    auto records = honest_run(bits, gen, false);
    EXPECT_THROW(public_comparison(records, bits, std::vector<int>{3}), ConfigError);
    EXPECT_THROW(public_comparison(records, bits, std::vector<int>{0}), ConfigError);
    EXPECT_THROW(public_comparison(records, bits, std::vector<int>{1, 1}), ConfigError);
    EXPECT_THROW(public_comparison(std::span(records).first(1), bits, std::vector<int>{1}), ConfigError);
}
