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

#ifndef TCLUSTER_DECODER_H
#define TCLUSTER_DECODER_H

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "tcluster/torus.h"

namespace tcluster {

inline constexpr std::string_view kDecoderName = "mwpm-blossom-exact";

struct Decoding {
    BitVector correction;
    /// Defect pairs (vertex indices, smaller first) in ascending order.
    std::vector<std::pair<int, int>> pairs;
    /// Total periodic Manhattan length of the pairing.
    int64_t weight = 0;
};

/// Exact minimum-weight perfect matching of the set checks, realized along
/// canonical geodesics. Throws std::logic_error on an odd number of defects.
Decoding decode_mwpm(const TorusLattice &lattice, const BitVector &defects);

struct TrialOutcome {
    /// Crossing parity of error + correction along x, y, z.
    std::array<uint8_t, 3> logical_class{0, 0, 0};
    int num_errors = 0;
    int num_defects = 0;

    bool failed() const {
        return logical_class[0] | logical_class[1] | logical_class[2];
    }
};

/// Decodes a given error set. Throws std::logic_error if the correction does
/// not clear the syndrome.
TrialOutcome decode_and_classify(const TorusLattice &lattice, const BitVector &errors);

/// One Monte Carlo trial: sample with stream `key`, decode, classify.
TrialOutcome trial_fails(const TorusLattice &lattice, double p, uint64_t key);

}  // namespace tcluster

#endif
