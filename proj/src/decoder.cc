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

#include "tcluster/decoder.h"

#include <algorithm>
#include <stdexcept>

#include "tcluster/blossom.h"

namespace tcluster {

Decoding decode_mwpm(const TorusLattice &lattice, const BitVector &defects) {
    if (defects.size() != static_cast<size_t>(lattice.num_vertices())) {
        throw std::invalid_argument("decode_mwpm: defect vector has wrong size");
    }
    std::vector<int> nodes;
    for (int v = 0; v < lattice.num_vertices(); v++) {
        if (defects[v]) {
            nodes.push_back(v);
        }
    }
    if (nodes.size() % 2 != 0) {
        throw std::logic_error("decode_mwpm: odd number of defects");
    }
    Decoding out;
    out.correction.assign(lattice.num_edges(), 0);
    int n = static_cast<int>(nodes.size());
    if (n == 0) {
        return out;
    }
    std::vector<int64_t> cost(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            int64_t d = lattice.distance(nodes[i], nodes[j]);
            cost[static_cast<size_t>(i) * n + j] = d;
            cost[static_cast<size_t>(j) * n + i] = d;
        }
    }
    std::vector<int> mate = min_cost_perfect_matching(n, cost);
    for (int i = 0; i < n; i++) {
        int j = mate[i];
        if (i < j) {
            out.pairs.emplace_back(nodes[i], nodes[j]);
            out.weight += cost[static_cast<size_t>(i) * n + j];
            toggle_geodesic(lattice, nodes[i], nodes[j], out.correction);
        }
    }
    return out;
}

TrialOutcome decode_and_classify(const TorusLattice &lattice, const BitVector &errors) {
    BitVector defects = syndrome(lattice, errors);
    Decoding dec = decode_mwpm(lattice, defects);
    BitVector residual = errors;
    for (size_t e = 0; e < residual.size(); e++) {
        residual[e] ^= dec.correction[e];
    }
    BitVector check = syndrome(lattice, residual);
    if (std::any_of(check.begin(), check.end(), [](uint8_t c) { return c != 0; })) {
        throw std::logic_error("decode_and_classify: correction leaves a nonzero syndrome");
    }
    TrialOutcome out;
    out.logical_class = crossing_parities(lattice, residual);
    out.num_errors = static_cast<int>(std::count(errors.begin(), errors.end(), 1));
    out.num_defects = static_cast<int>(std::count(defects.begin(), defects.end(), 1));
    return out;
}

TrialOutcome trial_fails(const TorusLattice &lattice, double p, uint64_t key) {
    return decode_and_classify(lattice, sample_errors(lattice, p, key));
}

}  // namespace tcluster
