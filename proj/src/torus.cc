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

#include "tcluster/torus.h"

#include <algorithm>
#include <stdexcept>

#include "tcluster/rng.h"

namespace tcluster {

TorusLattice::TorusLattice(int size) : size_(size) {
    if (size < 2 || size > 64) {
        throw std::invalid_argument("TorusLattice: size must lie in [2, 64]");
    }
}

int TorusLattice::vertex(int x, int y, int z) const {
    auto wrap = [this](int c) { return ((c % size_) + size_) % size_; };
    return wrap(x) + size_ * (wrap(y) + size_ * wrap(z));
}

std::array<int, 3> TorusLattice::coords(int v) const {
    return {v % size_, (v / size_) % size_, v / (size_ * size_)};
}

int TorusLattice::step(int v, int axis, int dir) const {
    std::array<int, 3> c = coords(v);
    c[axis] += dir;
    return vertex(c[0], c[1], c[2]);
}

std::array<int, 2> TorusLattice::endpoints(int e) const {
    int v = e / 3;
    return {v, step(v, e % 3, +1)};
}

int TorusLattice::distance(int a, int b) const {
    std::array<int, 3> ca = coords(a);
    std::array<int, 3> cb = coords(b);
    int d = 0;
    for (int k = 0; k < 3; k++) {
        int delta = std::abs(ca[k] - cb[k]);
        d += std::min(delta, size_ - delta);
    }
    return d;
}

BitVector sample_errors(const TorusLattice &lattice, double p, uint64_t key) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("sample_errors: p must lie in [0, 1]");
    }
    BitVector out(lattice.num_edges(), 0);
    if (p == 0) {
        return out;
    }
    CounterRng rng(key);
    BernoulliThreshold flip(p);
    for (uint8_t &e : out) {
        e = flip(rng);
    }
    return out;
}

BitVector syndrome(const TorusLattice &lattice, const BitVector &edges) {
    if (edges.size() != static_cast<size_t>(lattice.num_edges())) {
        throw std::invalid_argument("syndrome: edge vector has wrong size");
    }
    BitVector checks(lattice.num_vertices(), 0);
    for (int e = 0; e < lattice.num_edges(); e++) {
        if (edges[e]) {
            auto [a, b] = lattice.endpoints(e);
            checks[a] ^= 1;
            checks[b] ^= 1;
        }
    }
    return checks;
}

void toggle_geodesic(const TorusLattice &lattice, int a, int b, BitVector &edges) {
    int size = lattice.size();
    std::array<int, 3> cb = lattice.coords(b);
    int v = a;
    for (int axis = 0; axis < 3; axis++) {
        int forward = ((cb[axis] - lattice.coords(v)[axis]) % size + size) % size;
        int backward = (size - forward) % size;
        if (forward <= backward) {
            for (int k = 0; k < forward; k++) {
                edges[lattice.edge(v, axis)] ^= 1;
                v = lattice.step(v, axis, +1);
            }
        } else {
            for (int k = 0; k < backward; k++) {
                v = lattice.step(v, axis, -1);
                edges[lattice.edge(v, axis)] ^= 1;
            }
        }
    }
}

std::array<uint8_t, 3> crossing_parities(const TorusLattice &lattice, const BitVector &edges) {
    std::array<uint8_t, 3> out{0, 0, 0};
    int last = lattice.size() - 1;
    for (int v = 0; v < lattice.num_vertices(); v++) {
        std::array<int, 3> c = lattice.coords(v);
        for (int axis = 0; axis < 3; axis++) {
            if (c[axis] == last && edges[lattice.edge(v, axis)]) {
                out[axis] ^= 1;
            }
        }
    }
    return out;
}

}  // namespace tcluster
