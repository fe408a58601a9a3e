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

#include "tcluster/merge.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tcluster/zchannel.h"

namespace tcluster {

std::vector<int> MergedChannel::output_labels() const {
    std::vector<int> out;
    for (int q = 0; q < labels.size(); q++) {
        if ((output_qubits >> q) & 1) {
            out.push_back(labels.label(q));
        }
    }
    return out;
}

AffineProb MergedChannel::z_coefficient(std::initializer_list<int> z_labels) const {
    uint32_t mask = 0;
    for (int l : z_labels) {
        mask |= uint32_t{1} << labels.index_of(l);
    }
    return channel.coefficient(PauliString::z_on(mask));
}

MergedChannel merge_network(const QubitLabels &labels, const std::vector<GhzBlock> &blocks,
                            const std::vector<MergeGadget> &gadgets, std::string source) {
    if (blocks.empty()) {
        throw std::invalid_argument("merge_network: at least one block is required");
    }
    int n = labels.size();
    StabilizerState state = ghz_state(n, blocks[0].center, blocks[0].bonds);
    PauliChannel noise = e4_channel(n, blocks[0].center, blocks[0].bonds);
    for (size_t b = 1; b < blocks.size(); b++) {
        state = tensor(state, ghz_state(n, blocks[b].center, blocks[b].bonds));
        noise = compose_first_order(noise, e4_channel(n, blocks[b].center, blocks[b].bonds));
    }

    std::vector<PauliString> ops;
    std::vector<int> vars;
    for (const MergeGadget &g : gadgets) {
        ops.push_back(PauliString::single('Y', g.measured_center));
        ops.push_back(PauliString::single('Y', g.first_bond) * PauliString::single('Z', g.second_bond));
        ops.push_back(PauliString::single('Z', g.first_bond) * PauliString::single('Y', g.second_bond));
        for (int k = 0; k < 3; k++) {
            vars.push_back(static_cast<int>(vars.size()) + 1);
        }
    }
    MeasurementRecord record = run_measurements(state, ops, vars);
    PauliChannel out = propagate_channel(record, noise);
    uint32_t output = record.output.active();
    return MergedChannel{labels, output, blocks[0].center, std::move(out), std::move(source), std::move(record)};
}

std::array<PauliString, 3> e5_measurements() {
    QubitLabels labels = QubitLabels::one_based(8);
    return {
        PauliString::parse("Y3", labels),
        PauliString::parse("Y4Z5", labels),
        PauliString::parse("Z4Y5", labels),
    };
}

MergedChannel derive_e5() {
    QubitLabels labels = QubitLabels::one_based(8);
    auto q = [&](int label) { return labels.index_of(label); };
    std::vector<GhzBlock> blocks{
        {q(6), {q(7), q(8), q(5)}},
        {q(3), {q(1), q(2), q(4)}},
    };
    std::vector<MergeGadget> gadgets{{q(3), q(4), q(5)}};
    return merge_network(labels, blocks, gadgets, "ghz5");
}

MergedChannel derive_chain(int k) {
    if (k < 1 || k > 8) {
        throw std::invalid_argument("derive_chain: number of centers must lie in [1, 8]");
    }
    std::vector<GhzBlock> blocks;
    std::vector<MergeGadget> gadgets;
    for (int j = 0; j < k; j++) {
        blocks.push_back({4 * j, {4 * j + 1, 4 * j + 2, 4 * j + 3}});
        if (j > 0) {
            int previous = j == 1 ? 3 : 4 * (j - 1) + 2;
            gadgets.push_back({4 * j, 4 * j + 3, previous});
        }
    }
    std::stringstream source;
    source << "chain(" << k << ")";
    return merge_network(QubitLabels::one_based(4 * k), blocks, gadgets, source.str());
}

Q1Function exact_q1(const UnitCell &cell) {
    return [&cell](double delta_beta) { return q_of_delta_beta(cell, delta_beta).q1; };
}

FidelityLaw fidelity_law(int m, double delta_beta, const Q1Function &q1_of_beta) {
    if (m < 3) {
        throw std::invalid_argument("fidelity_law: connectivity m must be at least 3");
    }
    double q1 = q1_of_beta(delta_beta);
    double leading = (m - 2) * q1;
    if (!(leading < 1)) {
        std::stringstream ss;
        ss << "fidelity_law: the leading-error form assumes (m - 2) < 1/q1, violated for m=" << m
           << ", q1=" << q1;
        throw std::domain_error(ss.str());
    }
    return {m, delta_beta, q1, 1 - leading};
}

BetaShift beta_shift_check(int m, double delta_beta, const Q1Function &q1_of_beta) {
    if (m < 3) {
        throw std::invalid_argument("beta_shift_check: connectivity m must be at least 3");
    }
    if (!(delta_beta >= 5)) {
        throw std::invalid_argument("beta_shift_check: delta*beta must be at least 5");
    }
    double shifted = delta_beta + std::log(m - 2.0);
    double f_m = fidelity_law(m, shifted, q1_of_beta).fidelity;
    double f_4 = fidelity_law(3, delta_beta, q1_of_beta).fidelity;
    return {m, delta_beta, shifted, f_m, f_4, std::abs(f_m - f_4)};
}

}  // namespace tcluster
