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

#ifndef TCLUSTER_MERGE_H
#define TCLUSTER_MERGE_H

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "tcluster/channel.h"
#include "tcluster/stabilizer_state.h"
#include "tcluster/unitcell.h"

namespace tcluster {

/// One thermal four-qubit GHZ block: a filtered spin-3/2 center and its three bond qubits.
struct GhzBlock {
    int center;
    std::array<int, 3> bonds;
};

/// Fuses two blocks: measures Y on one block's center, then Y(first) Z(second)
/// and Z(first) Y(second) on one bond from each block.
struct MergeGadget {
    int measured_center;
    int first_bond;
    int second_bond;
};

/// Channel left on the surviving qubits after a network of merges.
struct MergedChannel {
    QubitLabels labels;
    uint32_t output_qubits = 0;
    int output_center = 0;
    PauliChannel channel;
    std::string source;
    MeasurementRecord record;

    std::vector<int> output_labels() const;
    /// Coefficient of the Z-string given by labels, e.g. {1, 2, 6}.
    AffineProb z_coefficient(std::initializer_list<int> z_labels) const;
};

/// Builds the GHZ blocks, applies one symbolic E4 channel per block (composed
/// at first order), runs the gadgets with outcomes post-selected to zero and
/// propagates the channel onto the surviving qubits.
MergedChannel merge_network(const QubitLabels &labels, const std::vector<GhzBlock> &blocks,
                            const std::vector<MergeGadget> &gadgets, std::string source);

/// Five-qubit GHZ from two blocks, qubits labelled 1..8: blocks
/// {center 6; bonds 7, 8, 5} and {center 3; bonds 1, 2, 4}, measured with
/// M1 = Y3, M2 = Y4 Z5, M3 = Z4 Y5. Output qubits 1, 2, 6, 7, 8.
MergedChannel derive_e5();

/// The observables of the e5 gadget, on labels 1..8.
std::array<PauliString, 3> e5_measurements();

/// Chain of k blocks (1 <= k <= 8) joined by k - 1 gadgets. Block j uses
/// qubits 4j (center) and 4j+1..4j+3 (bonds), labelled index + 1. Gadget j
/// measures center 4j, with bond 4j+3 of block j first and bond 4(j-1)+2 of
/// block j-1 second (bond 3 of block 0 for the first gadget), matching the
/// operator order of derive_e5. The surviving center is qubit 0 and k + 2
/// bonds remain.
MergedChannel derive_chain(int k);

using Q1Function = std::function<double(double delta_beta)>;

/// Exact q1 from the thermal unit cell (see zchannel).
Q1Function exact_q1(const UnitCell &cell);

struct FidelityLaw {
    int m;
    double delta_beta;
    double q1;
    double fidelity;
};

/// F_m = 1 - (m - 2) q1(delta_beta). Requires m >= 3 and (m - 2) q1 < 1.
FidelityLaw fidelity_law(int m, double delta_beta, const Q1Function &q1_of_beta);

struct BetaShift {
    int m;
    double delta_beta;
    double delta_beta_shifted;
    double f_m_shifted;
    double f4_base;
    double gap;
};

/// Compares F_m at delta_beta + ln(m - 2) with F_4 = 1 - q1 at delta_beta.
/// Requires m >= 3 and delta_beta >= 5.
BetaShift beta_shift_check(int m, double delta_beta, const Q1Function &q1_of_beta);

}  // namespace tcluster

#endif
