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
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tcluster {

namespace {

constexpr double kFilterProbabilityFloor = 1e-15;

Matrix identity(int dim) {
    return Matrix::Identity(dim, dim);
}

/// Lifts a single-bond operator onto bond `b` of the 8-dim bond space.
Matrix on_bond(const Matrix &op, int b) {
    Matrix out = identity(1);
    for (int k = 0; k < kBondCount; k++) {
        out = kron(out, k == b ? op : identity(2));
    }
    return out;
}

/// Rotation R with R^dagger S^axis R = S^z, for the given spin operators.
Matrix rotation_onto(const SpinOperators &spin, Axis axis) {
    switch (axis) {
        case Axis::X:
            return unitary_exp(spin.y, std::numbers::pi / 2);
        case Axis::Y:
            return unitary_exp(spin.x, -std::numbers::pi / 2);
        case Axis::Z:
            return identity(spin.dim());
    }
    throw std::logic_error("unreachable axis");
}

Matrix hadamard() {
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

Matrix center_basis_map(const SpinOperators &center, Axis axis) {
    Matrix map = Matrix::Zero(4, 2);
    // Index 3 is m = -3/2, index 0 is m = +3/2.
    map(3, 0) = 1;
    map(0, 1) = -1;
    return rotation_onto(center, axis) * map;
}

}  // namespace

std::string_view axis_name(Axis axis) {
    switch (axis) {
        case Axis::X:
            return "x";
        case Axis::Y:
            return "y";
        case Axis::Z:
            return "z";
    }
    return "?";
}

Axis parse_axis(std::string_view name) {
    if (name == "x") {
        return Axis::X;
    }
    if (name == "y") {
        return Axis::Y;
    }
    if (name == "z") {
        return Axis::Z;
    }
    throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

UnitCell build_unit_cell(double delta) {
    if (!(delta > 0) || !std::isfinite(delta)) {
        throw std::invalid_argument("build_unit_cell: delta must be positive and finite");
    }
    SpinOperators center = spin_matrices(1.5);
    SpinOperators bond = spin_matrices(0.5);

    Matrix dot = Matrix::Zero(kCellDim, kCellDim);
    std::array<Matrix, 3> total_bond;
    std::array<Matrix, 3> center_lifted;
    for (int a = 0; a < 3; a++) {
        total_bond[a] = Matrix::Zero(8, 8);
        for (int b = 0; b < kBondCount; b++) {
            total_bond[a] += on_bond(bond.component(a).matrix(), b);
        }
        center_lifted[a] = kron(center.component(a).matrix(), identity(8));
        dot += kron(center.component(a).matrix(), total_bond[a]);
    }

    Matrix s_sq = Matrix::Zero(kCellDim, kCellDim);
    Matrix i_sq = Matrix::Zero(kCellDim, kCellDim);
    Matrix t_sq = Matrix::Zero(kCellDim, kCellDim);
    for (int a = 0; a < 3; a++) {
        Matrix i_a = kron(identity(4), total_bond[a]);
        Matrix t_a = center_lifted[a] + i_a;
        s_sq += center_lifted[a] * center_lifted[a];
        i_sq += i_a * i_a;
        t_sq += t_a * t_a;
    }

    std::array<DenseHermitian, 3> povm;
    for (int a = 0; a < 3; a++) {
        const Matrix &s = center.component(a).matrix();
        Matrix f = (s * s - 0.25 * identity(4)) / std::sqrt(6.0);
        povm[a] = DenseHermitian(kron(f, identity(8)));
    }

    DenseHermitian hamiltonian(dot * delta);
    Eigensystem spectrum = eigensystem(hamiltonian);
    return UnitCell{
        delta,
        std::move(center),
        std::move(bond),
        std::move(hamiltonian),
        DenseHermitian((t_sq - s_sq - i_sq) * (delta / 2)),
        std::move(povm),
        std::move(spectrum),
    };
}

DenseHermitian thermal_state(const UnitCell &cell, double beta) {
    if (!std::isfinite(beta) || beta < 0) {
        throw std::invalid_argument("thermal_state: beta must be finite and non-negative");
    }
    const Eigensystem &es = cell.spectrum;
    double e0 = es.values(0);
    RealVector weights = (-(es.values.array() - e0) * beta).exp();
    weights /= weights.sum();
    return DenseHermitian(es.vectors * weights.cast<Complex>().asDiagonal() * es.vectors.adjoint());
}

Matrix qubit_frame_embedding(Axis outcome) {
    SpinOperators center = spin_matrices(1.5);
    Matrix bonds = kron(kron(hadamard(), hadamard()), hadamard());
    return kron(center_basis_map(center, outcome), bonds);
}

FilterResult povm_filter(const UnitCell &cell, const DenseHermitian &rho, Axis outcome) {
    if (rho.dim() != kCellDim) {
        throw std::invalid_argument("povm_filter: state must be 32-dimensional");
    }
    DenseHermitian filtered = rho.conjugated_by(cell.filter(outcome).matrix());
    double probability = filtered.trace();
    if (!(probability >= kFilterProbabilityFloor)) {
        std::stringstream ss;
        ss << "povm_filter: outcome " << axis_name(outcome) << " has probability " << probability;
        throw std::domain_error(ss.str());
    }
    filtered = filtered * (1 / probability);
    Matrix v = qubit_frame_embedding(outcome);
    DenseHermitian sigma(v.adjoint() * filtered.matrix() * v);
    return {sigma, probability, 1 - sigma.trace()};
}

Matrix local_correction_unitary(Axis outcome) {
    SpinOperators bond = spin_matrices(0.5);
    Matrix h = hadamard();
    Matrix bond_fix = h * rotation_onto(bond, outcome).adjoint() * h;
    return kron(identity(2), kron(kron(bond_fix, bond_fix), bond_fix));
}

DenseHermitian local_correction(const DenseHermitian &sigma, Axis outcome) {
    if (sigma.dim() != kQubitDim) {
        throw std::invalid_argument("local_correction: state must be 16-dimensional");
    }
    if (outcome == Axis::Z) {
        return sigma;
    }
    return sigma.conjugated_by(local_correction_unitary(outcome));
}

GhzReference ghz_reference() {
    Vector plus(2);
    plus << 1, 1;
    plus /= std::sqrt(2.0);
    Vector minus(2);
    minus << 1, -1;
    minus /= std::sqrt(2.0);
    Vector zero(2);
    zero << 1, 0;
    Vector one(2);
    one << 0, 1;
    Vector a = kron(kron(kron(zero, plus), plus), plus);
    Vector b = kron(kron(kron(one, minus), minus), minus);
    return {(a + b) / std::sqrt(2.0), center_basis_map(spin_matrices(1.5), Axis::Z)};
}

double state_fidelity(const Vector &psi, const DenseHermitian &rho) {
    return (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
}

}  // namespace tcluster
