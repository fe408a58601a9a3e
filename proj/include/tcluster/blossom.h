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

#ifndef TCLUSTER_BLOSSOM_H
#define TCLUSTER_BLOSSOM_H

#include <cstdint>
#include <span>
#include <vector>

namespace tcluster {

struct WeightedEdge {
    int u;
    int v;
    int64_t weight;
};

/// Maximum-weight matching (Edmonds' blossom algorithm with dual variables,
/// O(n^3)). With `max_cardinality` set, the result is a maximum-weight matching
/// among those of maximum cardinality. Integer weights keep every dual
/// update exact. Returns mate[v], or -1 for an unmatched vertex.
std::vector<int> max_weight_matching(int num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality);

/// Minimum-cost perfect matching on the complete graph whose symmetric cost
/// matrix is given row-major. `n` must be even. Returns mate[v].
std::vector<int> min_cost_perfect_matching(int n, std::span<const int64_t> cost);

}  // namespace tcluster

#endif
