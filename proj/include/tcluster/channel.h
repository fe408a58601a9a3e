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

#ifndef TCLUSTER_CHANNEL_H
#define TCLUSTER_CHANNEL_H

#include <array>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tcluster/affine_prob.h"
#include "tcluster/pauli.h"
#include "tcluster/stabilizer_state.h"

namespace tcluster {

/// Pauli channel sum_P p_P [P] with symbolic first-order probabilities.
///
/// Only non-identity terms are stored; the identity coefficient is always
/// 1 minus their sum, so the channel is normalized exactly by construction.
class PauliChannel {
   public:
    explicit PauliChannel(int num_qubits = 0);

    int num_qubits() const {
        return num_qubits_;
    }
    /// Adds `p` to the coefficient of [P]; phases of P are ignored.
    void add(const PauliString &pauli, const AffineProb &p);

    AffineProb coefficient(const PauliString &pauli) const;
    AffineProb identity_coefficient() const;
    /// Sum of all coefficients including the identity (exactly 1).
    AffineProb total() const;

    /// Non-identity terms keyed by PauliString::key(); zero terms are dropped.
    const std::map<uint64_t, AffineProb> &terms() const {
        return terms_;
    }
    /// All terms including the identity, as (Pauli, probability) pairs.
    std::vector<std::pair<PauliString, AffineProb>> all_terms() const;

    bool operator==(const PauliChannel &other) const = default;

   private:
    int num_qubits_;
    std::map<uint64_t, AffineProb> terms_;
};

/// Composition of two channels on the same register, truncated at total degree 1.
PauliChannel compose_first_order(const PauliChannel &a, const PauliChannel &b);

/// The thermal four-qubit GHZ channel
/// (1 - q1 - 3q2 - 3q3)[I] + q1[Z_c] + q2 sum_b [Z_b] + q3 sum_b [Z_c Z_b].
PauliChannel e4_channel(int num_qubits, int center, std::array<int, 3> bonds);

/// Pushes every term of `channel` (Z-type, defined on the record's input)
/// through the measurement pattern; terms landing on the same residual merge.
PauliChannel propagate_channel(const MeasurementRecord &record, const PauliChannel &channel);

}  // namespace tcluster

#endif
