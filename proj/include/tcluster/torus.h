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

#ifndef TCLUSTER_TORUS_H
#define TCLUSTER_TORUS_H

#include <array>
#include <cstdint>
#include <vector>

namespace tcluster {

/// One byte per element; nonzero means set.
using BitVector = std::vector<uint8_t>;

/// L x L x L periodic cubic lattice. Qubits live on edges, parity checks on
/// vertices. Vertex (x, y, z) has index x + L (y + L z); edge 3v + a joins
/// vertex v to its +a neighbour.
class TorusLattice {
   public:
    explicit TorusLattice(int size);

    int size() const {
        return size_;
    }
    int num_vertices() const {
        return size_ * size_ * size_;
    }
    int num_edges() const {
        return 3 * num_vertices();
    }
    int vertex(int x, int y, int z) const;
    std::array<int, 3> coords(int v) const;
    /// Vertex one step from v along `axis` in direction `dir` (+1 or -1).
    int step(int v, int axis, int dir) const;
    int edge(int v, int axis) const {
        return 3 * v + axis;
    }
    std::array<int, 2> endpoints(int e) const;
    /// Periodic Manhattan distance.
    int distance(int a, int b) const;

   private:
    int size_;
};

/// iid Bernoulli(p) errors on every edge, from the counter-based stream `key`.
BitVector sample_errors(const TorusLattice &lattice, double p, uint64_t key);

/// Vertex parities of an edge set.
BitVector syndrome(const TorusLattice &lattice, const BitVector &edges);

/// Toggles the edges of the canonical geodesic from a to b: axes in order
/// x, y, z; along each axis the shorter way round, the positive direction on ties.
void toggle_geodesic(const TorusLattice &lattice, int a, int b, BitVector &edges);

/// Bit a is the parity of edges crossing the plane between coordinate L-1
/// and 0 along axis a. For a cycle this is its homology class mod 2.
std::array<uint8_t, 3> crossing_parities(const TorusLattice &lattice, const BitVector &edges);

}  // namespace tcluster

#endif
