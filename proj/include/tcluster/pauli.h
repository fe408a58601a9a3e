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

#ifndef TCLUSTER_PAULI_H
#define TCLUSTER_PAULI_H

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcluster {

/// Qubit count limit of the symplectic representation (one bit per qubit).
inline constexpr int kMaxStabilizerQubits = 32;

/// Maps between engine qubit indices and the labels used in printed output.
class QubitLabels {
   public:
    QubitLabels() = default;
    explicit QubitLabels(std::vector<int> labels);
    /// Labels 1..n for indices 0..n-1.
    static QubitLabels one_based(int n);

    int size() const {
        return static_cast<int>(labels_.size());
    }
    int label(int index) const {
        return labels_.at(index);
    }
    int index_of(int label) const;
    const std::vector<int> &labels() const {
        return labels_;
    }

   private:
    std::vector<int> labels_;
};

/// i^phase * prod_q P_q, where P_q in {I, X, Y, Z} is selected by bit q of (x, z)
/// as (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z. The phase is taken relative to that
/// Hermitian product, so a Pauli string is Hermitian iff `phase` is even.
struct PauliString {
    uint32_t x = 0;
    uint32_t z = 0;
    uint8_t phase = 0;

    static PauliString z_on(uint32_t mask) {
        return {0, mask, 0};
    }
    static PauliString x_on(uint32_t mask) {
        return {mask, 0, 0};
    }
    static PauliString single(char kind, int qubit);

    /// Parses strings like "Z1Z2X6", "-Y4Z5" or "+i X3" using `labels` to map
    /// qubit labels to indices.
    static PauliString parse(std::string_view text, const QubitLabels &labels);

    bool is_identity() const {
        return x == 0 && z == 0;
    }
    bool is_hermitian() const {
        return (phase & 1) == 0;
    }
    bool is_z_type() const {
        return x == 0;
    }
    uint32_t support() const {
        return x | z;
    }
    int weight() const;
    /// Sign-free key identifying the Pauli up to phase.
    uint64_t key() const {
        return (static_cast<uint64_t>(x) << 32) | z;
    }
    static PauliString from_key(uint64_t key) {
        return {static_cast<uint32_t>(key >> 32), static_cast<uint32_t>(key), 0};
    }

    PauliString operator*(const PauliString &rhs) const;
    PauliString &operator*=(const PauliString &rhs);
    bool operator==(const PauliString &other) const = default;

    /// Restriction to the qubits in `mask` (phase reset to 0).
    PauliString restricted(uint32_t mask) const {
        return {x & mask, z & mask, 0};
    }

    std::string str(const QubitLabels &labels) const;
};

/// True iff the two strings commute (symplectic inner product is zero).
inline bool commutes(const PauliString &a, const PauliString &b) {
    return ((std::popcount((a.x & b.z) ^ (a.z & b.x))) & 1) == 0;
}

/// Affine function over GF(2) of the symbolic measurement outcomes:
/// constant XOR (XOR of m_i for bits i set in vars).
struct SignExpr {
    uint64_t vars = 0;
    bool constant = false;

    static SignExpr variable(int index);
    static SignExpr one() {
        return {0, true};
    }
    SignExpr operator^(const SignExpr &o) const {
        return {vars ^ o.vars, constant != o.constant};
    }
    SignExpr &operator^=(const SignExpr &o) {
        vars ^= o.vars;
        constant = constant != o.constant;
        return *this;
    }
    bool operator==(const SignExpr &other) const = default;
    bool is_constant() const {
        return vars == 0;
    }
    /// Value under the assignment whose bit i is m_i.
    bool evaluate(uint64_t assignment) const {
        return constant != ((std::popcount(vars & assignment) & 1) != 0);
    }
    /// e.g. "0", "1", "m1+m2", "1+m3".
    std::string str() const;
};

}  // namespace tcluster

#endif
