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

#ifndef TCLUSTER_ZCHANNEL_H
#define TCLUSTER_ZCHANNEL_H

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tcluster/unitcell.h"

namespace tcluster {

/// Z-type Pauli channel of a filtered four-qubit GHZ state.
///
/// Qubit order is center, bond 1, bond 2, bond 3. A Z-string is a 4-bit mask
/// whose bit (3 - k) is set when qubit k carries Z, so mask 0b1000 is Z on
/// the center and mask 0b0001 is Z on bond 3 (same significance as the dense
/// basis index).
struct ZPauliChannel {
    std::array<std::string, 4> qubits{"c", "b1", "b2", "b3"};
    std::array<double, kQubitDim> probs{};
    /// Largest |<GHZ|P sigma Q|GHZ>| over distinct Z-strings P, Q.
    double coherence_residual = 0;

    static constexpr uint32_t center_mask() {
        return 0b1000;
    }
    static constexpr uint32_t bond_mask(int bond) {
        return 1u << (kBondCount - 1 - bond);
    }
    double total() const;
};

/// Dense 16x16 matrix of the Z-string `mask` in the qubit frame.
Matrix z_string_matrix(uint32_t mask);

ZPauliChannel extract_z_channel(const DenseHermitian &sigma, const GhzReference &ref);

/// Error probabilities of the thermal GHZ channel at one temperature.
struct QTriple {
    double t_over_delta = 0;
    double q1 = 0;
    double q2 = 0;
    double q3 = 0;
    /// Total weight of the eight Z-strings not among I, Z_c, Z_b, Z_c Z_b.
    double residual_weight = 0;
    double coherence_residual = 0;
    /// Largest spread of the three per-bond values of q2 and of q3.
    double bond_asymmetry = 0;
};

/// Builds the triple from an extracted channel; used by q_of_temperature.
QTriple q_triple_from_channel(const ZPauliChannel &channel, double t_over_delta);

/// Channel of the thermal GHZ state at inverse temperature beta (units of 1/delta),
/// post-selected on the z outcome.
ZPauliChannel thermal_ghz_channel(const UnitCell &cell, double delta_beta);

/// Requires 0 < T/delta <= 2.
QTriple q_of_temperature(const UnitCell &cell, double t_over_delta);

/// Same as q_of_temperature but parameterized by delta * beta, which stays
/// well conditioned deep in the low-temperature regime (delta * beta up to 1000).
QTriple q_of_delta_beta(const UnitCell &cell, double delta_beta);

/// One QTriple per grid point, in grid order. Grid values must lie in (0, 2].
std::vector<QTriple> emit_curves(const UnitCell &cell, std::span<const double> grid);

}  // namespace tcluster

#endif
