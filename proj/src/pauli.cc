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

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tcluster {

namespace {

// Exponent g with sigma_a sigma_b = i^g sigma_(a xor b), indexed by 2*x + z.
// Order: I=0, Z=1, X=2, Y=3.
constexpr uint8_t kProductPhase[4][4] = {
    // I  Z  X  Y    (right factor)
    {0, 0, 0, 0},  // I
    {0, 0, 1, 3},  // Z: ZX = iY, ZY = -iX
    {0, 3, 0, 1},  // X: XZ = -iY, XY = iZ
    {0, 1, 3, 0},  // Y: YZ = iX, YX = -iZ
};

int pauli_code(const PauliString &p, int q) {
    return static_cast<int>((((p.x >> q) & 1) << 1) | ((p.z >> q) & 1));
}

}  // namespace

QubitLabels::QubitLabels(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.size() > static_cast<size_t>(kMaxStabilizerQubits)) {
        throw std::invalid_argument("QubitLabels: too many qubits");
    }
    for (size_t i = 0; i < labels_.size(); i++) {
        for (size_t j = i + 1; j < labels_.size(); j++) {
            if (labels_[i] == labels_[j]) {
                throw std::invalid_argument("QubitLabels: duplicate label " + std::to_string(labels_[i]));
            }
        }
    }
}

QubitLabels QubitLabels::one_based(int n) {
    std::vector<int> labels(n);
    for (int k = 0; k < n; k++) {
        labels[k] = k + 1;
    }
    return QubitLabels(std::move(labels));
}

int QubitLabels::index_of(int label) const {
    for (size_t k = 0; k < labels_.size(); k++) {
        if (labels_[k] == label) {
            return static_cast<int>(k);
        }
    }
    throw std::out_of_range("QubitLabels: unknown label " + std::to_string(label));
}

PauliString PauliString::single(char kind, int qubit) {
    if (qubit < 0 || qubit >= kMaxStabilizerQubits) {
        throw std::out_of_range("PauliString::single: qubit index out of range");
    }
    uint32_t bit = 1u << qubit;
    switch (kind) {
        case 'I':
            return {};
        case 'X':
            return {bit, 0, 0};
        case 'Y':
            return {bit, bit, 0};
        case 'Z':
            return {0, bit, 0};
    }
    throw std::invalid_argument(std::string("PauliString::single: unknown Pauli '") + kind + "'");
}

PauliString PauliString::parse(std::string_view text, const QubitLabels &labels) {
    PauliString out;
    size_t k = 0;
    auto skip_space = [&]() {
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
            k++;
        }
    };
    skip_space();
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            out.phase = 2;
        }
        k++;
        skip_space();
    }
    if (k < text.size() && text[k] == 'i') {
        out.phase = static_cast<uint8_t>((out.phase + 1) & 3);
        k++;
        skip_space();
    }
    while (k < text.size()) {
        char kind = text[k++];
        if (kind != 'X' && kind != 'Y' && kind != 'Z' && kind != 'I') {
            throw std::invalid_argument("PauliString::parse: unexpected '" + std::string(1, kind) + "' in '" +
                                        std::string(text) + "'");
        }
        size_t start = k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
            k++;
        }
        if (start == k) {
            throw std::invalid_argument("PauliString::parse: missing qubit label in '" + std::string(text) + "'");
        }
        int label = std::stoi(std::string(text.substr(start, k - start)));
        PauliString factor = single(kind, labels.index_of(label));
        if (factor.support() & out.support()) {
            throw std::invalid_argument("PauliString::parse: qubit repeated in '" + std::string(text) + "'");
        }
        out *= factor;
        skip_space();
    }
    return out;
}

int PauliString::weight() const {
    return std::popcount(support());
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString out{x ^ rhs.x, z ^ rhs.z, static_cast<uint8_t>(phase + rhs.phase)};
    uint32_t both = support() & rhs.support();
    while (both) {
        int q = std::countr_zero(both);
        both &= both - 1;
        out.phase = static_cast<uint8_t>(out.phase + kProductPhase[pauli_code(*this, q)][pauli_code(rhs, q)]);
    }
    out.phase &= 3;
    return out;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    *this = *this * rhs;
    return *this;
}

std::string PauliString::str(const QubitLabels &labels) const {
    static constexpr const char *kPhase[4] = {"+", "+i", "-", "-i"};
    std::stringstream ss;
    ss << kPhase[phase & 3];
    if (is_identity()) {
        ss << "I";
    }
    for (int q = 0; q < kMaxStabilizerQubits; q++) {
        int code = pauli_code(*this, q);
        if (code != 0) {
            ss << "IZXY"[code] << labels.label(q);
        }
    }
    return ss.str();
}

SignExpr SignExpr::variable(int index) {
    if (index < 0 || index >= 64) {
        throw std::out_of_range("SignExpr::variable: index must lie in [0, 64)");
    }
    return {uint64_t{1} << index, false};
}

std::string SignExpr::str() const {
    std::stringstream ss;
    bool first = true;
    if (constant || vars == 0) {
        ss << (constant ? "1" : "0");
        first = false;
    }
    for (int i = 0; i < 64; i++) {
        if ((vars >> i) & 1) {
            ss << (first ? "" : "+") << "m" << i;
            first = false;
        }
    }
    return ss.str();
}

}  // namespace tcluster
