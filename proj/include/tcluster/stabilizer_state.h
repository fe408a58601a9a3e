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

#ifndef TCLUSTER_STABILIZER_STATE_H
#define TCLUSTER_STABILIZER_STATE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcluster/pauli.h"

namespace tcluster {

/// A stabilizer generator (-1)^sign * P with P Hermitian and phase 0.
struct Generator {
    PauliString pauli;
    SignExpr sign;

    bool operator==(const Generator &other) const = default;
    std::string str(const QubitLabels &labels) const;
};

/// Multiplies two commuting generators, folding the product phase into the sign.
Generator multiply(const Generator &a, const Generator &b);

/// Pure stabilizer state on the qubits of `active` with symbolic signs.
///
/// Qubits outside `active` have been traced out; generators never touch them.
/// The generator list always has exactly popcount(active) independent,
/// mutually commuting entries.
class StabilizerState {
   public:
    StabilizerState(int num_qubits, std::vector<Generator> generators);
    StabilizerState(int num_qubits, uint32_t active, std::vector<Generator> generators);

    int num_qubits() const {
        return num_qubits_;
    }
    uint32_t active() const {
        return active_;
    }
    int num_active() const;
    const std::vector<Generator> &generators() const {
        return generators_;
    }

    /// Reduced row echelon form over GF(2) with a fixed column order (qubit
    /// ascending, X bit before Z bit). Unique for a given stabilizer group.
    std::vector<Generator> canonical_generators() const;

    /// Group equality including symbolic signs.
    bool same_group(const StabilizerState &other) const;

    /// Writes `target` as a product of generators. Returns the product (whose
    /// Pauli equals `target` up to phase) or nullopt when `target` is not in
    /// the group up to sign.
    std::optional<Generator> decompose(const PauliString &target) const;

    /// Keeps the subgroup supported on `active() & ~removed`. Throws if the
    /// removed qubits are still entangled with the rest.
    StabilizerState trace_out(uint32_t removed) const;

    std::string str(const QubitLabels &labels) const;

   private:
    void validate() const;

    int num_qubits_;
    uint32_t active_;
    std::vector<Generator> generators_;
};

/// GHZ state with generators X_c prod_b Z_b and Z_c X_b for each bond, all signs +1.
StabilizerState ghz_state(int num_qubits, int center, std::span<const int> bonds);

/// Product of states on disjoint active sets over the same register.
StabilizerState tensor(const StabilizerState &a, const StabilizerState &b);

struct MeasurementResult {
    StabilizerState state;
    bool random;
    /// Outcome m as a function of earlier outcomes; eigenvalue is (-1)^m.
    SignExpr outcome;
};

/// Measures the Hermitian Pauli `p`. A random outcome is named by the
/// symbolic variable `outcome_var`.
MeasurementResult measure_pauli(const StabilizerState &state, const PauliString &p, int outcome_var);

struct MeasuredOperator {
    PauliString pauli;
    int outcome_var;
    bool random;
    SignExpr outcome;
};

/// A measurement pattern applied to a stabilizer state, with the measured
/// qubits traced out afterwards. Outcomes are kept symbolic.
struct MeasurementRecord {
    StabilizerState input;
    std::vector<MeasuredOperator> measurements;
    uint32_t measured_qubits;
    StabilizerState output;
};

/// Measures `ops` in order (variables `vars`) and traces out their joint support.
MeasurementRecord run_measurements(const StabilizerState &input, std::span<const PauliString> ops,
                                   std::span<const int> vars);

struct PropagatedError {
    /// Z-type error on the output qubits, relative to the frame of the observed outcomes.
    PauliString residual;
    /// Bit i set iff outcome m_i is flipped.
    uint64_t outcome_flips;
};

/// Maps a Z-type error present before the measurements to its effect on the
/// output state. The flipped outcomes make the observer pick the wrong
/// Pauli frame; that frame change is folded into the residual, which is
/// chosen Z-type (unique when the output group has no pure-Z element).
PropagatedError propagate_error(const MeasurementRecord &record, const PauliString &error);

}  // namespace tcluster

#endif
