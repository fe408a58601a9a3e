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

#include "tcluster/blossom.h"

#include <random>
#include <utility>

#include <gtest/gtest.h>

#include "support/brute_force.h"

namespace tcluster {
namespace {

// Best (cardinality, weight) over all matchings of a small graph, by
// branching on the lowest undecided vertex.
std::pair<int, int64_t> brute_best(int n, const std::vector<WeightedEdge> &edges, bool max_cardinality) {
    std::vector<std::vector<std::pair<int, int64_t>>> adj(n);
    for (const WeightedEdge &e : edges) {
        adj[e.u].push_back({e.v, e.weight});
        adj[e.v].push_back({e.u, e.weight});
    }
    std::pair<int, int64_t> best{0, 0};
    std::vector<bool> used(n, false);
    auto better = [&](std::pair<int, int64_t> a, std::pair<int, int64_t> b) {
        return max_cardinality ? a > b : a.second > b.second;
    };
    auto rec = [&](auto &&self, int v, int card, int64_t w) -> void {
        while (v < n && used[v]) {
            v++;
        }
        if (v == n) {
            if (better({card, w}, best)) {
                best = {card, w};
            }
            return;
        }
        used[v] = true;
        self(self, v + 1, card, w);
        for (auto [u, wt] : adj[v]) {
            if (!used[u]) {
                used[u] = true;
                self(self, v + 1, card + 1, w + wt);
                used[u] = false;
            }
        }
        used[v] = false;
    };
    rec(rec, 0, 0, 0);
    return best;
}

std::pair<int, int64_t> score(const std::vector<int> &mate, const std::vector<WeightedEdge> &edges) {
    int card = 0;
    int64_t w = 0;
    for (const WeightedEdge &e : edges) {
        if (mate[e.u] == e.v) {
            EXPECT_EQ(mate[e.v], e.u);
            card++;
            w += e.weight;
        }
    }
    int matched = 0;
    for (size_t v = 0; v < mate.size(); v++) {
        if (mate[v] >= 0) {
            matched++;
            EXPECT_EQ(mate[mate[v]], static_cast<int>(v));
        }
    }
    EXPECT_EQ(matched, 2 * card) << "matched pair without an edge";
    return {card, w};
}

TEST(MaxWeightMatching, SmallCases) {
    std::vector<WeightedEdge> none;
    EXPECT_EQ(max_weight_matching(0, none, false), std::vector<int>{});
    std::vector<WeightedEdge> single{{0, 1, 1}};
    EXPECT_EQ(max_weight_matching(2, single, false), (std::vector<int>{1, 0}));
    // Path 0-1-2-3 with a heavy middle edge.
    std::vector<WeightedEdge> path{{0, 1, 5}, {1, 2, 11}, {2, 3, 5}};
    EXPECT_EQ(max_weight_matching(4, path, false), (std::vector<int>{-1, 2, 1, -1}));
    EXPECT_EQ(max_weight_matching(4, path, true), (std::vector<int>{1, 0, 3, 2}));
}

TEST(MaxWeightMatching, BlossomCases) {
    // Odd cycle with a pendant: needs blossom contraction.
    std::vector<WeightedEdge> e{{0, 1, 8}, {0, 2, 9}, {1, 2, 10}, {2, 3, 7}};
    EXPECT_EQ(score(max_weight_matching(4, e, false), e), (std::pair<int, int64_t>{2, 15}));
    std::vector<WeightedEdge> nested{{0, 1, 9}, {0, 2, 8}, {1, 2, 10}, {0, 3, 5}, {3, 4, 4}, {0, 5, 3}};
    EXPECT_EQ(score(max_weight_matching(6, nested, false), nested), brute_best(6, nested, false));
}

TEST(MaxWeightMatching, RandomGraphsAgainstExhaustiveSearch) {
    std::mt19937_64 rng(123);
    for (int round = 0; round < 3000; round++) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<WeightedEdge> edges;
        for (int u = 0; u < n; u++) {
            for (int v = u + 1; v < n; v++) {
                if (rng() % 100 < 55) {
                    edges.push_back({u, v, static_cast<int64_t>(rng() % 20) + (round % 3 == 0 ? 0 : 1)});
                }
            }
        }
        for (bool maxcard : {false, true}) {
            std::vector<int> mate = max_weight_matching(n, edges, maxcard);
            ASSERT_EQ(mate.size(), static_cast<size_t>(n));
            auto got = score(mate, edges);
            auto want = brute_best(n, edges, maxcard);
            if (maxcard) {
                EXPECT_EQ(got, want) << "round " << round;
            } else {
                EXPECT_EQ(got.second, want.second) << "round " << round;
            }
        }
    }
}

TEST(MinCostPerfectMatching, AgainstSubsetDp) {
    std::mt19937_64 rng(321);
    for (int round = 0; round < 400; round++) {
        int n = 2 * (1 + static_cast<int>(rng() % 7));
        std::vector<int64_t> cost(n * n, 0);
        oracle::CostMatrix m(n, std::vector<int64_t>(n, 0));
        for (int u = 0; u < n; u++) {
            for (int v = u + 1; v < n; v++) {
                int64_t c = static_cast<int64_t>(rng() % 12);
                cost[u * n + v] = cost[v * n + u] = c;
                m[u][v] = m[v][u] = c;
            }
        }
        std::vector<int> mate = min_cost_perfect_matching(n, cost);
        int64_t total = 0;
        for (int v = 0; v < n; v++) {
            ASSERT_GE(mate[v], 0);
            ASSERT_EQ(mate[mate[v]], v);
            if (v < mate[v]) {
                total += cost[v * n + mate[v]];
            }
        }
        EXPECT_EQ(total, oracle::min_pairing_dp(m)) << round;
    }
}

TEST(MinCostPerfectMatching, RejectsOddOrMalformed) {
    std::vector<int64_t> cost(9, 1);
    EXPECT_THROW(min_cost_perfect_matching(3, cost), std::invalid_argument);
    std::vector<int64_t> short_cost(3, 1);
    EXPECT_THROW(min_cost_perfect_matching(2, short_cost), std::invalid_argument);
}

}  // namespace
}  // namespace tcluster
