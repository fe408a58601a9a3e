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

#include "tcluster/zchannel.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tcluster {

namespace {

constexpr double kTraceTolerance = 1e-10;
constexpr double kNegativeProbabilityTolerance = 1e-12;

}  // namespace

double ZPauliChannel::total() const {
    double t = 0;
    for (double p : probs) {
        t += p;
    }
    return t;
}

Matrix z_string_matrix(uint32_t mask) {
    Matrix out = Matrix::Zero(kQubitDim, kQubitDim);
    for (int k = 0; k < kQubitDim; k++) {
        out(k, k) = (std::popcount(static_cast<uint32_t>(k) & mask) & 1) ? -1.0 : 1.0;
    }
    return out;
}

ZPauliChannel extract_z_channel(const DenseHermitian &sigma, const GhzReference &ref) {
    if (sigma.dim() != kQubitDim) {
        throw std::invalid_argument("extract_z_channel: state must be 16-dimensional");
    }
    if (std::abs(sigma.trace() - 1) > kTraceTolerance) {
        std::stringstream ss;
        ss << "extract_z_channel: trace " << sigma.trace() << " is not 1";
        throw std::invalid_argument(ss.str());
    }

    // Displaced references P|GHZ>; Z-strings are diagonal so this is an entrywise sign flip.
    Matrix displaced(kQubitDim, kQubitDim);
    for (uint32_t p = 0; p < kQubitDim; p++) {
        displaced.col(p) = z_string_matrix(p) * ref.state;
    }
    Matrix in_basis = displaced.adjoint() * sigma.matrix() * displaced;

    ZPauliChannel out;
    for (int p = 0; p < kQubitDim; p++) {
        double v = in_basis(p, p).real();
        if (v < -kNegativeProbabilityTolerance) {
            std::stringstream ss;
            ss << "extract_z_channel: negative weight " << v << " on Z-string " << p;
            throw std::domain_error(ss.str());
        }
        out.probs[p] = std::max(0.0, v);
        for (int q = 0; q < kQubitDim; q++) {
            if (q != p) {
                out.coherence_residual = std::max(out.coherence_residual, std::abs(in_basis(p, q)));
            }
        }
    }
    return out;
}

QTriple q_triple_from_channel(const ZPauliChannel &channel, double t_over_delta) {
    QTriple q;
    q.t_over_delta = t_over_delta;
    q.q1 = channel.probs[ZPauliChannel::center_mask()];
    std::array<double, kBondCount> q2{};
    std::array<double, kBondCount> q3{};
    for (int b = 0; b < kBondCount; b++) {
        uint32_t m = ZPauliChannel::bond_mask(b);
        q2[b] = channel.probs[m];
        q3[b] = channel.probs[m | ZPauliChannel::center_mask()];
    }
    auto [lo2, hi2] = std::minmax_element(q2.begin(), q2.end());
    auto [lo3, hi3] = std::minmax_element(q3.begin(), q3.end());
    q.q2 = (q2[0] + q2[1] + q2[2]) / 3;
    q.q3 = (q3[0] + q3[1] + q3[2]) / 3;
    q.bond_asymmetry = std::max(*hi2 - *lo2, *hi3 - *lo3);
    // Summed directly, not as a complement, to keep relative precision at low T.
    double residual = 0;
    for (uint32_t m = 0; m < kQubitDim; m++) {
        uint32_t bonds = m & 0b0111;
        if (std::popcount(bonds) >= 2) {
            residual += channel.probs[m];
        }
    }
    q.residual_weight = residual;
    q.coherence_residual = channel.coherence_residual;
    return q;
}

ZPauliChannel thermal_ghz_channel(const UnitCell &cell, double delta_beta) {
    DenseHermitian rho = thermal_state(cell, delta_beta / cell.delta);
    FilterResult filtered = povm_filter(cell, rho, Axis::Z);
    return extract_z_channel(filtered.sigma, ghz_reference());
}

QTriple q_of_delta_beta(const UnitCell &cell, double delta_beta) {
    if (!(delta_beta >= 0.5) || !std::isfinite(delta_beta)) {
        throw std::invalid_argument("q_of_delta_beta: delta*beta must be finite and at least 1/2");
    }
    return q_triple_from_channel(thermal_ghz_channel(cell, delta_beta), 1 / delta_beta);
}

QTriple q_of_temperature(const UnitCell &cell, double t_over_delta) {
    if (!(t_over_delta > 0 && t_over_delta <= 2)) {
        throw std::invalid_argument("q_of_temperature: T/delta must lie in (0, 2]");
    }
    return q_triple_from_channel(thermal_ghz_channel(cell, 1 / t_over_delta), t_over_delta);
}

std::vector<QTriple> emit_curves(const UnitCell &cell, std::span<const double> grid) {
    std::vector<QTriple> rows;
    rows.reserve(grid.size());
    for (double t : grid) {
        rows.push_back(q_of_temperature(cell, t));
    }
    return rows;
}

}  // namespace tcluster
