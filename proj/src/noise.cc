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

#include "tcluster/noise.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tcluster {

NoiseParams map_noise(double q1, double q2, double q3, int n_cor) {
    for (double q : {q1, q2, q3}) {
        if (!(q >= 0 && q <= 0.2)) {
            std::stringstream ss;
            ss << "map_noise: error probability " << q << " outside [0, 0.2]";
            throw std::invalid_argument(ss.str());
        }
    }
    if (n_cor < 0) {
        throw std::invalid_argument("map_noise: n_cor must be non-negative");
    }
    NoiseParams out;
    out.q_ind = 2 * q1 + 5 * q2 + 9 * q3;
    out.q_cor = q2 + q3;
    out.n_cor = n_cor;
    out.p_eff = out.q_ind;
    for (int k = 0; k < n_cor; k++) {
        out.p_eff = xor_combine(out.p_eff, out.q_cor);
    }
    if (out.p_eff > 0.5) {
        std::stringstream ss;
        ss << "map_noise: effective flip probability " << out.p_eff << " exceeds 1/2";
        throw std::domain_error(ss.str());
    }
    return out;
}

NoiseParams map_noise(const QTriple &q, int n_cor) {
    return map_noise(q.q1, q.q2, q.q3, n_cor);
}

}  // namespace tcluster
