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

#ifndef TCLUSTER_RNG_H
#define TCLUSTER_RNG_H

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace tcluster {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Hashes a tuple of integers into a stream key. Distinct tuples give
/// unrelated streams, so (seed, L, grid index, trial) addresses one trial.
inline uint64_t derive_key(std::initializer_list<uint64_t> parts) {
    uint64_t h = 0x6A09E667F3BCC909ull;
    for (uint64_t p : parts) {
        h = splitmix64(h ^ splitmix64(p));
    }
    return h;
}

/// Counter-based generator: output i is a fixed mix of (key, i), so a stream
/// is reproducible from its key alone. Satisfies UniformRandomBitGenerator.
class CounterRng {
   public:
    using result_type = uint64_t;

    explicit CounterRng(uint64_t key) : key_(key) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint64_t>::max();
    }
    result_type operator()() {
        return splitmix64(key_ + 0x9E3779B97F4A7C15ull * ++counter_);
    }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

/// Bernoulli(p) from one 64-bit draw; p >= 1 always fires and p <= 0 never does.
class BernoulliThreshold {
   public:
    explicit BernoulliThreshold(double p)
        : always_(p >= 1), threshold_(p <= 0 ? 0 : p >= 1 ? 0 : static_cast<uint64_t>(std::ldexp(p, 64))) {
    }
    bool operator()(CounterRng &rng) const {
        return always_ || rng() < threshold_;
    }

   private:
    bool always_;
    uint64_t threshold_;
};

}  // namespace tcluster

#endif
