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

#ifndef TCLUSTER_NOISE_H
#define TCLUSTER_NOISE_H

#include "tcluster/zchannel.h"

namespace tcluster {

/// Z-error model on the qubits of the 3D cluster state.
struct NoiseParams {
    /// Independent error probability per qubit: 2 q1 + 5 q2 + 9 q3.
    double q_ind = 0;
    /// Probability of each correlated pair error on opposite face edges: q2 + q3.
    double q_cor = 0;
    /// Correlated-pair contributions folded into each qubit.
    int n_cor = 0;
    /// Per-qubit flip probability after folding correlated pairs in as independent flips.
    double p_eff = 0;
};

/// Probability that exactly one of two independent flips happens.
inline double xor_combine(double a, double b) {
    return a * (1 - b) + b * (1 - a);
}

/// Requires each q in [0, 0.2] and n_cor >= 0; throws std::domain_error when p_eff > 1/2.
NoiseParams map_noise(double q1, double q2, double q3, int n_cor);
NoiseParams map_noise(const QTriple &q, int n_cor);

}  // namespace tcluster

#endif
