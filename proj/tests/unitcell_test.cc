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

#include "tcluster/unitcell.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

namespace tcluster {
namespace {

using Mat2 = Eigen::Matrix2cd;

// The 24 single-qubit Cliffords modulo phase, generated from H and S.
std::vector<Mat2> clifford_group() {
    Mat2 h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    Mat2 s;
    s << 1, 0, 0, Complex(0, 1);
    auto normalize = [](Mat2 m) {
        for (int k = 0; k < 4; k++) {
            Complex c = m(k / 2, k % 2);
            if (std::abs(c) > 1e-9) {
                return Mat2(m * (std::abs(c) / c));
            }
        }
        return m;
    };
    std::vector<Mat2> group{Mat2::Identity()};
    for (size_t i = 0; i < group.size(); i++) {
        for (const Mat2 &g : {h, s}) {
            Mat2 next = normalize(g * group[i]);
            bool seen = false;
            for (const Mat2 &e : group) {
                seen = seen || (e - next).norm() < 1e-9;
            }
            if (!seen) {
                group.push_back(next);
            }
        }
    }
    return group;
}

// Applies a 2x2 matrix to qubit k of a 16-dim frame vector (k = 0 is the center,
// the most significant index bit).
Vector apply_local(const Mat2 &u, int k, const Vector &v) {
    Vector out = Vector::Zero(16);
    int bit = 3 - k;
    for (int i = 0; i < 16; i++) {
        int b = (i >> bit) & 1;
        for (int a = 0; a < 2; a++) {
            out(i ^ ((b ^ a) << bit)) += u(a, b) * v(i);
        }
    }
    return out;
}

Vector filtered_ground(const UnitCell &cell, Axis axis) {
    FilterResult f = povm_filter(cell, DenseHermitian::projector(cell.ground_state()), axis);
    Eigensystem es = eigensystem(f.sigma);
    EXPECT_NEAR(es.values(15), 1, 1e-10) << "filtered ground state must be pure";
    return es.vectors.col(15);
}

class UnitCellTest : public ::testing::Test {
   protected:
    static void SetUpTestSuite() {
        cell_ = new UnitCell(build_unit_cell());
    }
    static void TearDownTestSuite() {
        delete cell_;
    }
    static UnitCell *cell_;
};
UnitCell *UnitCellTest::cell_ = nullptr;

TEST_F(UnitCellTest, DotAndCasimirFormsAgree) {
    EXPECT_LT(frobenius_distance(cell_->hamiltonian.matrix(), cell_->hamiltonian_casimir.matrix()), 1e-12);
}

TEST_F(UnitCellTest, PovmCompleteness) {
    Matrix sum = Matrix::Zero(kCellDim, kCellDim);
    for (Axis a : kAllAxes) {
        sum += cell_->filter(a).matrix().adjoint() * cell_->filter(a).matrix();
    }
    EXPECT_LT(frobenius_distance(sum, Matrix::Identity(kCellDim, kCellDim)), 1e-12);
}

TEST_F(UnitCellTest, SpectrumGroundAndGap) {
    const RealVector &e = cell_->spectrum.values;
    EXPECT_NEAR(e(0), -15.0 / 4, 1e-10);
    EXPECT_GT(e(1) - e(0), 1 - 1e-10);
    EXPECT_NEAR(e(1) - e(0), 1, 1e-10);
    // Total spin F = 1 with bond spin 3/2 is the threefold first level.
    EXPECT_NEAR(e(3) - e(0), 1, 1e-10);
    EXPECT_GT(e(4) - e(1), 0.5);
}

TEST_F(UnitCellTest, SpectrumScalesWithDelta) {
    UnitCell scaled = build_unit_cell(2.5);
    EXPECT_NEAR(scaled.ground_energy(), -15.0 / 4 * 2.5, 1e-10);
    EXPECT_THROW(build_unit_cell(0), std::invalid_argument);
}

TEST_F(UnitCellTest, ThermalStateProperties) {
    for (double beta : {0.0, 0.5, 5.0, 1000.0}) {
        DenseHermitian rho = thermal_state(*cell_, beta);
        EXPECT_NEAR(rho.trace(), 1, 1e-12);
        EXPECT_GE(eigensystem(rho).values(0), -1e-14);
    }
    DenseHermitian cold = thermal_state(*cell_, 1000.0);
    EXPECT_LT(frobenius_distance(cold.matrix(), DenseHermitian::projector(cell_->ground_state()).matrix()), 1e-12);
    DenseHermitian hot = thermal_state(*cell_, 0.0);
    EXPECT_LT(frobenius_distance(hot.matrix(), DenseHermitian::identity(kCellDim).matrix() / kCellDim), 1e-12);
    EXPECT_THROW(thermal_state(*cell_, -1), std::invalid_argument);
}

TEST_F(UnitCellTest, FilterProbabilitiesSumToOne) {
    for (double beta : {0.5, 3.0, 1000.0}) {
        DenseHermitian rho = thermal_state(*cell_, beta);
        double total = 0;
        for (Axis a : kAllAxes) {
            FilterResult f = povm_filter(*cell_, rho, a);
            total += f.probability;
            EXPECT_LT(std::abs(f.leakage), 1e-12);
            EXPECT_NEAR(f.sigma.trace(), 1, 1e-12);
        }
        EXPECT_NEAR(total, 1, 1e-12);
    }
}

TEST_F(UnitCellTest, GroundStateZOutcomeIsReferenceGhz) {
    GhzReference ref = ghz_reference();
    FilterResult f = povm_filter(*cell_, DenseHermitian::projector(cell_->ground_state()), Axis::Z);
    EXPECT_NEAR(state_fidelity(ref.state, f.sigma), 1, 1e-10);
}

TEST_F(UnitCellTest, CliffordSearchReachesUnitFidelityForEveryOutcome) {
    std::vector<Mat2> cliffords = clifford_group();
    ASSERT_EQ(cliffords.size(), 24u);
    GhzReference ref = ghz_reference();
    for (Axis axis : kAllAxes) {
        Vector s = filtered_ground(*cell_, axis);
        double best = 0;
        for (const Mat2 &c0 : cliffords) {
            Vector v0 = apply_local(c0, 0, s);
            for (const Mat2 &c1 : cliffords) {
                Vector v1 = apply_local(c1, 1, v0);
                for (const Mat2 &c2 : cliffords) {
                    Vector v2 = apply_local(c2, 2, v1);
                    for (const Mat2 &c3 : cliffords) {
                        best = std::max(best, std::norm(ref.state.dot(apply_local(c3, 3, v2))));
                    }
                }
            }
        }
        EXPECT_NEAR(best, 1, 1e-10) << axis_name(axis);
        FilterResult f = povm_filter(*cell_, DenseHermitian::projector(cell_->ground_state()), axis);
        EXPECT_NEAR(state_fidelity(ref.state, local_correction(f.sigma, axis)), 1, 1e-10) << axis_name(axis);
    }
}

Matrix pauli_string(const std::array<int, 4> &codes) {
    Mat2 paulis[4];
    paulis[0] = Mat2::Identity();
    paulis[1] << 0, 1, 1, 0;
    paulis[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    paulis[3] << 1, 0, 0, -1;
    Matrix m = paulis[codes[0]];
    for (int k = 1; k < 4; k++) {
        m = kron(m, Matrix(paulis[codes[k]]));
    }
    return m;
}

TEST_F(UnitCellTest, CorrectionsAreCliffords) {
    for (Axis axis : kAllAxes) {
        Matrix u = local_correction_unitary(axis);
        EXPECT_LT(frobenius_distance(u * u.adjoint(), Matrix::Identity(16, 16)), 1e-12);
        for (int q = 0; q < 4; q++) {
            for (int kind : {1, 3}) {
                std::array<int, 4> codes{0, 0, 0, 0};
                codes[q] = kind;
                Matrix image = u * pauli_string(codes) * u.adjoint();
                double best = 0;
                for (int idx = 0; idx < 256; idx++) {
                    std::array<int, 4> c{idx & 3, (idx >> 2) & 3, (idx >> 4) & 3, (idx >> 6) & 3};
                    best = std::max(best, std::abs((pauli_string(c).adjoint() * image).trace()) / 16);
                }
                EXPECT_NEAR(best, 1, 1e-10) << axis_name(axis) << " qubit " << q;
            }
        }
    }
}

TEST_F(UnitCellTest, ImpossibleOutcomeThrows) {
    // A state confined to the m = +-1/2 center levels never passes the z filter.
    Vector v = Vector::Zero(kCellDim);
    v(8) = 1;
    EXPECT_THROW(povm_filter(*cell_, DenseHermitian::projector(v), Axis::Z), std::domain_error);
}

TEST(Axis, ParseAndName) {
    EXPECT_EQ(parse_axis("x"), Axis::X);
    EXPECT_EQ(parse_axis("z"), Axis::Z);
    EXPECT_EQ(axis_name(Axis::Y), "y");
    EXPECT_THROW(parse_axis("w"), std::invalid_argument);
}

}  // namespace
}  // namespace tcluster
