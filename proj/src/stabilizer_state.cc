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

#include "tcluster/stabilizer_state.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tcluster {

namespace {

// Column c of the symplectic matrix: qubit c / 2, X bit when c is even, Z bit when odd.
bool column_bit(const PauliString &p, int c) {
    uint32_t word = (c & 1) ? p.z : p.x;
    return (word >> (c >> 1)) & 1;
}

std::vector<Generator> reduced_row_echelon(std::vector<Generator> rows, uint32_t columns_of,
                                           std::vector<int> *pivots = nullptr) {
    size_t next = 0;
    for (int c = 0; c < 2 * kMaxStabilizerQubits && next < rows.size(); c++) {
        if (!((columns_of >> (c >> 1)) & 1)) {
            continue;
        }
        size_t found = next;
        while (found < rows.size() && !column_bit(rows[found].pauli, c)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && column_bit(rows[r].pauli, c)) {
                rows[r] = multiply(rows[r], rows[next]);
            }
        }
        if (pivots) {
            pivots->push_back(c);
        }
        next++;
    }
    return rows;
}

}  // namespace

std::string Generator::str(const QubitLabels &labels) const {
    std::string p = pauli.str(labels);
    if (sign.is_constant()) {
        if (sign.constant) {
            p[0] = p[0] == '+' ? '-' : '+';
        }
        return p;
    }
    return "(-1)^(" + sign.str() + ") " + p;
}

Generator multiply(const Generator &a, const Generator &b) {
    if (!commutes(a.pauli, b.pauli)) {
        throw std::logic_error("multiply: generators anticommute");
    }
    PauliString p = a.pauli * b.pauli;
    Generator out{p, a.sign ^ b.sign};
    if (p.phase == 2) {
        out.sign ^= SignExpr::one();
    }
    out.pauli.phase = 0;
    return out;
}

StabilizerState::StabilizerState(int num_qubits, std::vector<Generator> generators)
    : StabilizerState(num_qubits,
                      num_qubits >= kMaxStabilizerQubits ? ~uint32_t{0} : (uint32_t{1} << num_qubits) - 1,
                      std::move(generators)) {
}

StabilizerState::StabilizerState(int num_qubits, uint32_t active, std::vector<Generator> generators)
    : num_qubits_(num_qubits), active_(active), generators_(std::move(generators)) {
    validate();
}

int StabilizerState::num_active() const {
    return std::popcount(active_);
}

void StabilizerState::validate() const {
    if (num_qubits_ < 0 || num_qubits_ > kMaxStabilizerQubits) {
        throw std::invalid_argument("StabilizerState: qubit count outside [0, 32]");
    }
    if (num_qubits_ < kMaxStabilizerQubits && (active_ >> num_qubits_) != 0) {
        throw std::invalid_argument("StabilizerState: active qubits outside the register");
    }
    if (generators_.size() != static_cast<size_t>(num_active())) {
        std::stringstream ss;
        ss << "StabilizerState: " << generators_.size() << " generators for " << num_active() << " qubits";
        throw std::invalid_argument(ss.str());
    }
    for (size_t i = 0; i < generators_.size(); i++) {
        const PauliString &p = generators_[i].pauli;
        if (p.phase != 0) {
            throw std::invalid_argument("StabilizerState: generator phase must be folded into its sign");
        }
        if (p.support() & ~active_) {
            throw std::invalid_argument("StabilizerState: generator acts on inactive qubit");
        }
        for (size_t j = i + 1; j < generators_.size(); j++) {
            if (!commutes(p, generators_[j].pauli)) {
                throw std::invalid_argument("StabilizerState: generators do not commute");
            }
        }
        if (p.is_identity()) {
            throw std::invalid_argument("StabilizerState: identity generator");
        }
    }
    std::vector<int> pivots;
    reduced_row_echelon(generators_, active_, &pivots);
    if (pivots.size() != generators_.size()) {
        throw std::invalid_argument("StabilizerState: generators are not independent");
    }
}

std::vector<Generator> StabilizerState::canonical_generators() const {
    return reduced_row_echelon(generators_, active_);
}

bool StabilizerState::same_group(const StabilizerState &other) const {
    return num_qubits_ == other.num_qubits_ && active_ == other.active_ &&
           canonical_generators() == other.canonical_generators();
}

std::optional<Generator> StabilizerState::decompose(const PauliString &target) const {
    std::vector<int> pivots;
    std::vector<Generator> rows = reduced_row_echelon(generators_, active_, &pivots);
    Generator acc{};
    PauliString rest = target.restricted(~uint32_t{0});
    for (size_t r = 0; r < rows.size(); r++) {
        if (column_bit(rest, pivots[r])) {
            acc = multiply(acc, rows[r]);
            rest.x ^= rows[r].pauli.x;
            rest.z ^= rows[r].pauli.z;
        }
    }
    if (!rest.is_identity()) {
        return std::nullopt;
    }
    return acc;
}

StabilizerState StabilizerState::trace_out(uint32_t removed) const {
    if (removed & ~active_) {
        throw std::invalid_argument("trace_out: qubit is not active");
    }
    std::vector<Generator> rows = generators_;
    std::vector<bool> used(rows.size(), false);
    for (int c = 0; c < 2 * kMaxStabilizerQubits; c++) {
        if (!((removed >> (c >> 1)) & 1)) {
            continue;
        }
        size_t pivot = rows.size();
        for (size_t r = 0; r < rows.size(); r++) {
            if (!used[r] && column_bit(rows[r].pauli, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) {
            continue;
        }
        used[pivot] = true;
        for (size_t r = 0; r < rows.size(); r++) {
            if (!used[r] && column_bit(rows[r].pauli, c)) {
                rows[r] = multiply(rows[r], rows[pivot]);
            }
        }
    }
    std::vector<Generator> kept;
    for (size_t r = 0; r < rows.size(); r++) {
        if (!used[r]) {
            kept.push_back(rows[r]);
        }
    }
    uint32_t remaining = active_ & ~removed;
    if (kept.size() != static_cast<size_t>(std::popcount(remaining))) {
        throw std::invalid_argument("trace_out: removed qubits are entangled with the remaining ones");
    }
    return StabilizerState(num_qubits_, remaining, std::move(kept));
}

std::string StabilizerState::str(const QubitLabels &labels) const {
    std::stringstream ss;
    ss << "{";
    for (size_t k = 0; k < generators_.size(); k++) {
        ss << (k ? ", " : "") << generators_[k].str(labels);
    }
    ss << "}";
    return ss.str();
}

StabilizerState ghz_state(int num_qubits, int center, std::span<const int> bonds) {
    auto check = [&](int q) {
        if (q < 0 || q >= num_qubits) {
            throw std::invalid_argument("ghz_state: qubit index outside the register");
        }
        return uint32_t{1} << q;
    };
    uint32_t active = check(center);
    uint32_t bond_mask = 0;
    for (int b : bonds) {
        uint32_t bit = check(b);
        if (active & bit) {
            throw std::invalid_argument("ghz_state: duplicate qubit label");
        }
        active |= bit;
        bond_mask |= bit;
    }
    std::vector<Generator> gens;
    gens.push_back({PauliString{1u << center, bond_mask, 0}, {}});
    for (int b : bonds) {
        gens.push_back({PauliString{1u << b, 1u << center, 0}, {}});
    }
    return StabilizerState(num_qubits, active, std::move(gens));
}

StabilizerState tensor(const StabilizerState &a, const StabilizerState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("tensor: register sizes differ");
    }
    if (a.active() & b.active()) {
        throw std::invalid_argument("tensor: states overlap");
    }
    std::vector<Generator> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return StabilizerState(a.num_qubits(), a.active() | b.active(), std::move(gens));
}

MeasurementResult measure_pauli(const StabilizerState &state, const PauliString &p, int outcome_var) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("measure_pauli: observable must be Hermitian");
    }
    if (p.is_identity()) {
        throw std::invalid_argument("measure_pauli: cannot measure the identity");
    }
    if (p.support() & ~state.active()) {
        throw std::invalid_argument("measure_pauli: observable acts on inactive qubit");
    }
    SignExpr own_sign = p.phase == 2 ? SignExpr::one() : SignExpr{};
    std::vector<Generator> gens = state.generators();
    std::vector<size_t> anti;
    for (size_t k = 0; k < gens.size(); k++) {
        if (!commutes(gens[k].pauli, p)) {
            anti.push_back(k);
        }
    }
    if (anti.empty()) {
        std::optional<Generator> g = state.decompose(p);
        if (!g) {
            throw std::logic_error("measure_pauli: commuting observable outside a full-rank group");
        }
        return {state, false, g->sign ^ own_sign};
    }
    size_t pivot = anti.front();
    for (size_t k = 1; k < anti.size(); k++) {
        gens[anti[k]] = multiply(gens[anti[k]], gens[pivot]);
    }
    SignExpr outcome = SignExpr::variable(outcome_var);
    PauliString hermitian = p;
    hermitian.phase = 0;
    gens[pivot] = Generator{hermitian, outcome ^ own_sign};
    return {StabilizerState(state.num_qubits(), state.active(), std::move(gens)), true, outcome};
}

MeasurementRecord run_measurements(const StabilizerState &input, std::span<const PauliString> ops,
                                   std::span<const int> vars) {
    if (ops.size() != vars.size()) {
        throw std::invalid_argument("run_measurements: one outcome variable per observable");
    }
    StabilizerState state = input;
    std::vector<MeasuredOperator> measured;
    uint32_t support = 0;
    for (size_t k = 0; k < ops.size(); k++) {
        MeasurementResult r = measure_pauli(state, ops[k], vars[k]);
        measured.push_back({ops[k], vars[k], r.random, r.outcome});
        state = std::move(r.state);
        support |= ops[k].support();
    }
    StabilizerState output = state.trace_out(support);
    return {input, std::move(measured), support, std::move(output)};
}

PropagatedError propagate_error(const MeasurementRecord &record, const PauliString &error) {
    if (!error.is_z_type()) {
        throw std::invalid_argument("propagate_error: error must be Z-type");
    }
    if (error.support() & ~record.input.active()) {
        throw std::invalid_argument("propagate_error: error touches a qubit outside the input state");
    }
    uint64_t flips = 0;
    for (const MeasuredOperator &m : record.measurements) {
        // A flipped deterministic outcome only signals detection; it moves no frame.
        if (m.random && !commutes(error, m.pauli)) {
            flips ^= uint64_t{1} << m.outcome_var;
        }
    }

    // Solve for a Z-type frame change R: R anticommutes with output generator g
    // exactly when g's sign flips under the flipped outcomes.
    const std::vector<Generator> &gens = record.output.generators();
    struct Row {
        uint32_t coeffs;
        bool rhs;
    };
    std::vector<Row> rows;
    for (const Generator &g : gens) {
        rows.push_back({g.pauli.x, (std::popcount(g.sign.vars & flips) & 1) != 0});
    }
    uint32_t frame = 0;
    std::vector<std::pair<int, size_t>> pivots;
    size_t next = 0;
    for (int q = 0; q < kMaxStabilizerQubits && next < rows.size(); q++) {
        if (!((record.output.active() >> q) & 1)) {
            continue;
        }
        size_t found = next;
        while (found < rows.size() && !((rows[found].coeffs >> q) & 1)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && ((rows[r].coeffs >> q) & 1)) {
                rows[r].coeffs ^= rows[next].coeffs;
                rows[r].rhs = rows[r].rhs != rows[next].rhs;
            }
        }
        pivots.emplace_back(q, next);
        next++;
    }
    for (size_t r = next; r < rows.size(); r++) {
        if (rows[r].rhs) {
            throw std::logic_error("propagate_error: no Pauli frame realizes the flipped outcomes");
        }
    }
    for (auto [q, r] : pivots) {
        if (rows[r].rhs) {
            frame |= uint32_t{1} << q;
        }
    }
    PauliString residual = PauliString::z_on((error.z & record.output.active()) ^ frame);
    return {residual, flips};
}

}  // namespace tcluster
