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

#ifndef TCLUSTER_UNITCELL_H
#define TCLUSTER_UNITCELL_H

#include <array>
#include <string_view>

#include "tcluster/smalldense.h"

namespace tcluster {

/// POVM outcome / quantization axis.
enum class Axis { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAllAxes{Axis::X, Axis::Y, Axis::Z};

std::string_view axis_name(Axis axis);
Axis parse_axis(std::string_view name);

inline constexpr int kBondCount = 3;
/// Spin-3/2 center times three bond qubits.
inline constexpr int kCellDim = 32;
/// Center qubit times three bond qubits after filtering.
inline constexpr int kQubitDim = 16;

/// Spectrum statements (ground energy multiplicity, gap) use this tolerance in units of delta.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// One spin-3/2 center coupled to the three bond spin-1/2 sectors it touches.
///
/// Basis ordering is center first (m = 3/2 ... -3/2), then bonds 1, 2, 3
/// (m = 1/2, -1/2 each). The Hamiltonian is built as delta * S.(I1 + I2 + I3);
/// `hamiltonian_casimir` is the same operator assembled from the total-spin
/// Casimirs, kept for the operator identity check.
struct UnitCell {
    double delta;
    SpinOperators center;
    SpinOperators bond;
    DenseHermitian hamiltonian;
    DenseHermitian hamiltonian_casimir;
    /// F^x, F^y, F^z lifted to the 32-dim cell space.
    std::array<DenseHermitian, 3> povm;
    Eigensystem spectrum;

    const DenseHermitian &filter(Axis axis) const {
        return povm[static_cast<int>(axis)];
    }
    double ground_energy() const {
        return spectrum.values(0);
    }
    /// Ground-state vector (unique for this Hamiltonian).
    Vector ground_state() const {
        return spectrum.vectors.col(0);
    }
};

UnitCell build_unit_cell(double delta = 1.0);

/// Gibbs state exp(-beta H) / Z, evaluated with the ground energy shifted to 0.
DenseHermitian thermal_state(const UnitCell &cell, double beta);

/// 32x16 isometry from the filtered qubit frame into the cell space.
///
/// Center: |0~> = R|S=-3/2>, |1~> = -R|S=+3/2> where R rotates the z axis
/// onto `outcome`. Bonds: frame |+> and |-> are the physical m = +1/2 and
/// m = -1/2 states, so each bond carries a Hadamard between the frame
/// computational basis and the physical one.
Matrix qubit_frame_embedding(Axis outcome);

struct FilterResult {
    /// Normalized post-measurement state in the 16-dim qubit frame.
    DenseHermitian sigma;
    double probability;
    /// Weight of F rho F^dagger outside the frame subspace (zero up to rounding).
    double leakage;
};

/// Applies the POVM element for `outcome`, renormalizes, and reduces to the qubit frame.
FilterResult povm_filter(const UnitCell &cell, const DenseHermitian &rho, Axis outcome);

/// Product of single-qubit unitaries (center, bond 1, bond 2, bond 3) mapping
/// the filtered GHZ state for `outcome` onto the outcome-z GHZ state.
Matrix local_correction_unitary(Axis outcome);

DenseHermitian local_correction(const DenseHermitian &sigma, Axis outcome);

/// The four-qubit GHZ state (|0~ +++> + |1~ --->)/sqrt(2) in the qubit frame.
struct GhzReference {
    Vector state;
    /// Center-qubit embedding {|0~>, |1~>} into the 4-dim center space (4x2).
    Matrix basis_map;
};

GhzReference ghz_reference();

/// Fidelity <psi| rho |psi> for a pure reference state.
double state_fidelity(const Vector &psi, const DenseHermitian &rho);

}  // namespace tcluster

#endif
