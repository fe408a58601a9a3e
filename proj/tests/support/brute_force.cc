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

#include "support/brute_force.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace oracle {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

void check_shape(const CostMatrix &cost, size_t limit) {
    if (cost.size() % 2 != 0) {
        throw std::invalid_argument("pairing needs an even number of points");
    }
    if (cost.size() > limit) {
        throw std::invalid_argument("too many points for the reference pairing");
    }
    for (const auto &row : cost) {
        if (row.size() != cost.size()) {
            throw std::invalid_argument("cost matrix must be square");
        }
    }
}

void recurse(const CostMatrix &cost, std::vector<bool> &used, int64_t acc, int64_t &best, int64_t &seen) {
    size_t first = 0;
    while (first < used.size() && used[first]) {
        first++;
    }
    if (first == used.size()) {
        seen++;
        best = std::min(best, acc);
        return;
    }
    used[first] = true;
    for (size_t j = first + 1; j < used.size(); j++) {
        if (!used[j]) {
            used[j] = true;
            recurse(cost, used, acc + cost[first][j], best, seen);
            used[j] = false;
        }
    }
    used[first] = false;
}

}  // namespace

int64_t min_pairing_exhaustive(const CostMatrix &cost, int64_t *pairings_seen) {
    check_shape(cost, 12);
    std::vector<bool> used(cost.size(), false);
    int64_t best = kInf;
    int64_t seen = 0;
    recurse(cost, used, 0, best, seen);
    if (pairings_seen) {
        *pairings_seen = seen;
    }
    return cost.empty() ? 0 : best;
}

int64_t min_pairing_dp(const CostMatrix &cost) {
    check_shape(cost, 20);
    size_t n = cost.size();
    std::vector<int64_t> dp(size_t{1} << n, kInf);
    dp[0] = 0;
    for (uint32_t mask = 0; mask < (1u << n); mask++) {
        if (dp[mask] >= kInf) {
            continue;
        }
        size_t i = 0;
        while (i < n && ((mask >> i) & 1)) {
            i++;
        }
        if (i == n) {
            continue;
        }
        for (size_t j = i + 1; j < n; j++) {
            if (!((mask >> j) & 1)) {
                uint32_t next = mask | (1u << i) | (1u << j);
                dp[next] = std::min(dp[next], dp[mask] + cost[i][j]);
            }
        }
    }
    return dp[(size_t{1} << n) - 1];
}

}  // namespace oracle
