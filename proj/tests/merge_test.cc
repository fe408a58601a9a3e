// Copyright 2026 The tcluster Authors
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

#include "tcluster/merge.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "support/dense_qubits.h"
#include "tcluster/zchannel.h"

namespace tcluster {
namespace {

AffineProb one() {
    return AffineProb::constant(Rational(1));
}
const AffineProb q1 = AffineProb::q(1);
const AffineProb q2 = AffineProb::q(2);
const AffineProb q3 = AffineProb::q(3);

std::vector<Generator> listed_stabilizers(const QubitLabels &l) {
    SignExpr m12 = SignExpr::variable(1) ^ SignExpr::variable(2);
    SignExpr m23 = SignExpr::variable(2) ^ SignExpr::variable(3);
    return {
        {PauliString::parse("Z1Z2X6Z7Z8", l), m12}, {PauliString::parse("X1Z6", l), m23},
        {PauliString::parse("X2Z6", l), m23},       {PauliString::parse("X7Z6", l), {}},
        {PauliString::parse("X8Z6", l), {}},
    };
}

TEST(DeriveE5, Coefficients) {
    MergedChannel e = derive_e5();
    EXPECT_EQ(e.channel.identity_coefficient(), one() - q1 * Rational(2) - q2 * Rational(6) - q3 * Rational(6));
    EXPECT_EQ(e.z_coefficient({6}), q1 * Rational(2));
    for (int i : {1, 2, 7, 8}) {
        EXPECT_EQ(e.z_coefficient({i}), q2) << i;
        EXPECT_EQ(e.z_coefficient({i, 6}), q3) << i;
    }
    EXPECT_EQ(e.z_coefficient({1, 2}), q2 + q3);
    EXPECT_EQ(e.z_coefficient({1, 2, 6}), q2 + q3);
    EXPECT_EQ(e.channel.terms().size(), 11u);
    EXPECT_EQ(e.channel.total(), one());
    EXPECT_EQ(e.output_labels(), (std::vector<int>{1, 2, 6, 7, 8}));
    EXPECT_EQ(e.source, "ghz5");
}

TEST(DeriveE5, BondLabelSymmetry) {
    MergedChannel e = derive_e5();
    auto swap_bits = [](uint32_t m, int a, int b) {
        uint32_t ba = (m >> a) & 1;
        uint32_t bb = (m >> b) & 1;
        return (m & ~((1u << a) | (1u << b))) | (ba << b) | (bb << a);
    };
    for (const auto &[key, p] : e.channel.terms()) {
        uint32_t z = PauliString::from_key(key).z;
        uint32_t swapped = swap_bits(swap_bits(z, 0, 1), 6, 7);
        EXPECT_EQ(e.channel.coefficient(PauliString::z_on(swapped)), p);
    }
}

TEST(DeriveE5, OutputStabilizersAsGroup) {
    MergedChannel e = derive_e5();
    StabilizerState listed(8, e.record.output.active(), listed_stabilizers(e.labels));
    EXPECT_TRUE(e.record.output.same_group(listed));
    EXPECT_EQ(e.record.output.canonical_generators().size(), 5u);
}

// Assigns the eight labels to (center A, bonds of A, center B, bonds of B) in
// every possible way, keeping the measured observables fixed, and counts the
// assignments that reproduce the listed stabilizer group exactly.
TEST(DeriveE5, LabelPermutationSearch) {
    QubitLabels l = QubitLabels::one_based(8);
    std::vector<Generator> target = listed_stabilizers(l);
    std::array<PauliString, 3> meas = e5_measurements();
    std::vector<int> vars{1, 2, 3};
    std::array<int, 8> perm;
    std::iota(perm.begin(), perm.end(), 0);
    int matches = 0;
    bool adopted = false;
    bool spec_literal = false;
    do {
        // perm = (centerA, a1, a2, a3, centerB, b1, b2, b3) as indices.
        if (!(perm[1] < perm[2] && perm[2] < perm[3] && perm[5] < perm[6] && perm[6] < perm[7])) {
            continue;
        }
        std::vector<int> ba{perm[1], perm[2], perm[3]};
        std::vector<int> bb{perm[5], perm[6], perm[7]};
        StabilizerState in = tensor(ghz_state(8, perm[0], ba), ghz_state(8, perm[4], bb));
        MeasurementRecord r = run_measurements(in, meas, vars);
        if (r.output.active() != 0b11100011u) {
            continue;
        }
        if (r.output.same_group(StabilizerState(8, r.output.active(), target))) {
            matches++;
            auto is = [&](int c, std::vector<int> bonds, int c2, std::vector<int> bonds2) {
                std::sort(bonds.begin(), bonds.end());
                std::sort(bonds2.begin(), bonds2.end());
                return perm[0] == c && ba == bonds && perm[4] == c2 && bb == bonds2;
            };
            adopted = adopted || is(5, {4, 6, 7}, 2, {0, 1, 3});
            spec_literal = spec_literal || is(5, {3, 6, 7}, 2, {0, 1, 4});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_GE(matches, 1);
    EXPECT_TRUE(adopted);
    // With bond 4 attached to center 6 the first generator carries m1+m3.
    EXPECT_FALSE(spec_literal);
    RecordProperty("matching_assignments", matches);
}

TEST(DeriveE5, SingleErrorsAgreeWithDenseResiduals) {
    // Symbolic E5 rebuilt from dense residuals of each first-order E4 term.
    oracle::MergeModel model{8, {{5, {6, 7, 4}}, {2, {0, 1, 3}}}, {"IIYIIIII", "IIIYZIII", "IIIZYIII"}, 0b11100011};
    std::map<uint32_t, AffineProb> dense;
    for (const oracle::Block &b : model.blocks) {
        std::vector<std::pair<uint32_t, AffineProb>> terms{{1u << b.center, q1}};
        for (int bond : b.bonds) {
            terms.push_back({1u << bond, q2});
            terms.push_back({(1u << bond) | (1u << b.center), q3});
        }
        for (const auto &[mask, p] : terms) {
            oracle::Residual r = oracle::dense_residual(model, mask);
            ASSERT_TRUE(r.consistent);
            dense[r.mask] += p;
        }
    }
    MergedChannel e = derive_e5();
    const std::array<int, 5> kept{0, 1, 5, 6, 7};
    for (const auto &[packed, p] : dense) {
        uint32_t full = 0;
        for (int i = 0; i < 5; i++) {
            full |= ((packed >> i) & 1u) << kept[i];
        }
        EXPECT_EQ(e.channel.coefficient(PauliString::z_on(full)), p);
    }
    EXPECT_EQ(dense.size(), e.channel.terms().size());
}

TEST(DeriveChain, SingleBlockIsE4) {
    MergedChannel c = derive_chain(1);
    EXPECT_EQ(c.channel, e4_channel(4, 0, {1, 2, 3}));
    EXPECT_EQ(c.source, "chain(1)");
}

TEST(DeriveChain, TwoBlocksIsE5UpToRelabeling) {
    MergedChannel c = derive_chain(2);
    MergedChannel e = derive_e5();
    const std::array<int, 8> to_e5{6, 7, 8, 5, 3, 1, 2, 4};
    EXPECT_EQ(c.channel.terms().size(), e.channel.terms().size());
    for (const auto &[key, p] : c.channel.terms()) {
        uint32_t z = PauliString::from_key(key).z;
        uint32_t mapped = 0;
        for (int q = 0; q < 8; q++) {
            if ((z >> q) & 1) {
                mapped |= 1u << (to_e5[q] - 1);
            }
        }
        EXPECT_EQ(e.channel.coefficient(PauliString::z_on(mapped)), p);
    }
}

TEST(DeriveChain, CenterPhaseWeightGrowsWithLength) {
    for (int k = 1; k <= 4; k++) {
        MergedChannel c = derive_chain(k);
        AffineProb center = c.channel.coefficient(PauliString::z_on(1u << c.output_center));
        EXPECT_EQ(center.coeff(1), Rational(k)) << k;
    }
}

TEST(DeriveChain, NormalizationAndSigns) {
    for (int k = 1; k <= 8; k++) {
        MergedChannel c = derive_chain(k);
        EXPECT_EQ(c.channel.total(), one());
        AffineProb id = c.channel.identity_coefficient();
        EXPECT_EQ(id.coeff(0), Rational(1));
        for (int j = 1; j <= 3; j++) {
            EXPECT_LE(id.coeff(j), Rational(0));
        }
        EXPECT_EQ(std::popcount(c.output_qubits), k + 3);
    }
    EXPECT_THROW(derive_chain(0), std::invalid_argument);
    EXPECT_THROW(derive_chain(9), std::invalid_argument);
}

class FidelityTest : public ::testing::Test {
   protected:
    static void SetUpTestSuite() {
        cell_ = new UnitCell(build_unit_cell());
    }
    static void TearDownTestSuite() {
        delete cell_;
    }
    static UnitCell *cell_;
};
UnitCell *FidelityTest::cell_ = nullptr;

TEST_F(FidelityTest, LawValues) {
    Q1Function exact = exact_q1(*cell_);
    double q8 = q_of_delta_beta(*cell_, 8).q1;
    EXPECT_DOUBLE_EQ(fidelity_law(3, 8, exact).fidelity, 1 - q8);
    EXPECT_DOUBLE_EQ(fidelity_law(4, 8, exact).fidelity, 1 - 2 * q8);
    EXPECT_DOUBLE_EQ(fidelity_law(10, 8, exact).fidelity, 1 - 8 * q8);
    Q1Function zero = [](double) { return 0.0; };
    for (int m : {3, 5, 100}) {
        EXPECT_EQ(fidelity_law(m, 8, zero).fidelity, 1);
    }
}

TEST_F(FidelityTest, ValidityConditions) {
    Q1Function big = [](double) { return 0.2; };
    EXPECT_THROW(fidelity_law(10, 8, big), std::domain_error);
    EXPECT_THROW(fidelity_law(2, 8, big), std::invalid_argument);
    EXPECT_THROW(beta_shift_check(4, 4.0, exact_q1(*cell_)), std::invalid_argument);
}

TEST_F(FidelityTest, BetaShift) {
    Q1Function exact = exact_q1(*cell_);
    BetaShift m3 = beta_shift_check(3, 8, exact);
    EXPECT_EQ(m3.delta_beta_shifted, 8);
    EXPECT_EQ(m3.gap, 0);
    for (auto [m, db] : {std::pair{6, 8.0}, std::pair{10, 10.0}}) {
        BetaShift s = beta_shift_check(m, db, exact);
        double q = exact(db);
        EXPECT_NEAR(s.delta_beta_shifted, db + std::log(m - 2.0), 1e-14);
        EXPECT_LE(s.gap, 5 * q * q) << m;
        EXPECT_NEAR(s.f4_base, 1 - q, 1e-15);
    }
}

}  // namespace
}  // namespace tcluster
