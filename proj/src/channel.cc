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

#include "tcluster/channel.h"

#include <stdexcept>

namespace tcluster {

PauliChannel::PauliChannel(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxStabilizerQubits) {
        throw std::invalid_argument("PauliChannel: qubit count outside [0, 32]");
    }
}

void PauliChannel::add(const PauliString &pauli, const AffineProb &p) {
    uint32_t reg = num_qubits_ >= kMaxStabilizerQubits ? ~uint32_t{0} : (uint32_t{1} << num_qubits_) - 1;
    if (pauli.support() & ~reg) {
        throw std::invalid_argument("PauliChannel::add: Pauli acts outside the register");
    }
    if (pauli.is_identity()) {
        // Identity weight is implied by normalization.
        return;
    }
    auto it = terms_.try_emplace(pauli.key()).first;
    it->second += p;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

AffineProb PauliChannel::coefficient(const PauliString &pauli) const {
    if (pauli.is_identity()) {
        return identity_coefficient();
    }
    auto it = terms_.find(pauli.key());
    return it == terms_.end() ? AffineProb{} : it->second;
}

AffineProb PauliChannel::identity_coefficient() const {
    AffineProb id = AffineProb::constant(1);
    for (const auto &[key, p] : terms_) {
        id -= p;
    }
    return id;
}

AffineProb PauliChannel::total() const {
    AffineProb t = identity_coefficient();
    for (const auto &[key, p] : terms_) {
        t += p;
    }
    return t;
}

std::vector<std::pair<PauliString, AffineProb>> PauliChannel::all_terms() const {
    std::vector<std::pair<PauliString, AffineProb>> out;
    out.emplace_back(PauliString{}, identity_coefficient());
    for (const auto &[key, p] : terms_) {
        out.emplace_back(PauliString::from_key(key), p);
    }
    return out;
}

PauliChannel compose_first_order(const PauliChannel &a, const PauliChannel &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("compose_first_order: channels act on different registers");
    }
    PauliChannel out(a.num_qubits());
    auto ta = a.all_terms();
    auto tb = b.all_terms();
    for (const auto &[pa, ca] : ta) {
        for (const auto &[pb, cb] : tb) {
            AffineProb c = multiply_first_order(ca, cb);
            if (!c.is_zero()) {
                out.add(pa * pb, c);
            }
        }
    }
    return out;
}

PauliChannel e4_channel(int num_qubits, int center, std::array<int, 3> bonds) {
    PauliChannel ch(num_qubits);
    PauliString zc = PauliString::single('Z', center);
    ch.add(zc, AffineProb::q(1));
    for (int b : bonds) {
        PauliString zb = PauliString::single('Z', b);
        if (zb.support() & zc.support()) {
            throw std::invalid_argument("e4_channel: bond coincides with center");
        }
        ch.add(zb, AffineProb::q(2));
        ch.add(zc * zb, AffineProb::q(3));
    }
    return ch;
}

PauliChannel propagate_channel(const MeasurementRecord &record, const PauliChannel &channel) {
    if (channel.num_qubits() != record.input.num_qubits()) {
        throw std::invalid_argument("propagate_channel: channel and record use different registers");
    }
    PauliChannel out(channel.num_qubits());
    for (const auto &[key, p] : channel.terms()) {
        PropagatedError e = propagate_error(record, PauliString::from_key(key));
        out.add(e.residual, p);
    }
    return out;
}

}  // namespace tcluster
