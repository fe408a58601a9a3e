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

#include "tcluster/pauli.h"

#include <complex>

#include <Eigen/Dense>
#include <gtest/gtest.h>

namespace tcluster {
namespace {

TEST(QubitLabels, OneBasedAndLookup) {
    QubitLabels labels = QubitLabels::one_based(8);
    EXPECT_EQ(labels.size(), 8);
    EXPECT_EQ(labels.label(0), 1);
    EXPECT_EQ(labels.index_of(6), 5);
    EXPECT_THROW(labels.index_of(9), std::out_of_range);
}

TEST(PauliString, ParseAndPrint) {
    QubitLabels labels = QubitLabels::one_based(8);
    PauliString p = PauliString::parse("Z1Z2X6Z7Z8", labels);
    EXPECT_EQ(p.x, 1u << 5);
    EXPECT_EQ(p.z, (1u << 0) | (1u << 1) | (1u << 6) | (1u << 7));
    EXPECT_EQ(p.str(labels), "+Z1Z2X6Z7Z8");
    PauliString y = PauliString::parse("-Y4Z5", labels);
    EXPECT_EQ(y.phase, 2);
    EXPECT_EQ(y.str(labels), "-Y4Z5");
    EXPECT_TRUE(PauliString::parse("", labels).is_identity());
    EXPECT_THROW(PauliString::parse("Z1Z1", labels), std::invalid_argument);
    EXPECT_THROW(PauliString::parse("Q1", labels), std::invalid_argument);
    EXPECT_THROW(PauliString::parse("Z9", labels), std::out_of_range);
}

TEST(PauliString, SingleQubitProducts) {
    PauliString x = PauliString::single('X', 0);
    PauliString y = PauliString::single('Y', 0);
    PauliString z = PauliString::single('Z', 0);
    // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
    EXPECT_EQ(x * y, (PauliString{0, 1, 1}));
    EXPECT_EQ(y * z, (PauliString{1, 0, 1}));
    EXPECT_EQ(z * x, (PauliString{1, 1, 1}));
    EXPECT_EQ(y * x, (PauliString{0, 1, 3}));
    EXPECT_EQ(x * x, PauliString{});
    EXPECT_EQ(y * y, PauliString{});
}

TEST(PauliString, ProductsMatchMatrices) {
    using Mat2 = Eigen::Matrix2cd;
    std::array<Mat2, 4> m;
    m[0] = Mat2::Identity();
    m[1] << 0, 1, 1, 0;
    m[2] << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    m[3] << 1, 0, 0, -1;
    const char kinds[] = {'I', 'X', 'Y', 'Z'};
    std::complex<double> i(0, 1);
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            PauliString pa = a ? PauliString::single(kinds[a], 0) : PauliString{};
            PauliString pb = b ? PauliString::single(kinds[b], 0) : PauliString{};
            PauliString prod = pa * pb;
            int code = (prod.x & 1) ? ((prod.z & 1) ? 2 : 1) : ((prod.z & 1) ? 3 : 0);
            Mat2 expected = std::pow(i, prod.phase) * m[code];
            EXPECT_LT((m[a] * m[b] - expected).norm(), 1e-14) << a << b;
        }
    }
}

TEST(PauliString, Commutation) {
    QubitLabels labels = QubitLabels::one_based(8);
    EXPECT_TRUE(commutes(PauliString::parse("Y4Z5", labels), PauliString::parse("Z4Y5", labels)));
    EXPECT_FALSE(commutes(PauliString::parse("Y3", labels), PauliString::parse("Z3", labels)));
    EXPECT_TRUE(commutes(PauliString::parse("X1Z6", labels), PauliString::parse("X7Z6", labels)));
    EXPECT_FALSE(commutes(PauliString::parse("X1", labels), PauliString::parse("Z1Z2", labels)));
}

TEST(PauliString, HermiticityAndWeight) {
    PauliString p{0b11, 0b10, 1};
    EXPECT_FALSE(p.is_hermitian());
    EXPECT_EQ(p.weight(), 2);
    EXPECT_EQ(p.support(), 0b11u);
    EXPECT_EQ(PauliString::from_key(p.key()), (PauliString{0b11, 0b10, 0}));
    EXPECT_EQ(p.restricted(0b01), (PauliString{0b01, 0, 0}));
}

TEST(SignExpr, AlgebraAndPrinting) {
    SignExpr a = SignExpr::variable(1) ^ SignExpr::variable(2);
    EXPECT_EQ(a.str(), "m1+m2");
    EXPECT_EQ((a ^ SignExpr::one()).str(), "1+m1+m2");
    EXPECT_EQ(SignExpr{}.str(), "0");
    EXPECT_EQ(SignExpr::one().str(), "1");
    EXPECT_TRUE(a.evaluate(0b010));
    EXPECT_FALSE(a.evaluate(0b110));
    EXPECT_EQ(a ^ a, SignExpr{});
}

}  // namespace
}  // namespace tcluster
