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

#ifndef TCLUSTER_THRESHOLD_H
#define TCLUSTER_THRESHOLD_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tcluster/unitcell.h"

namespace tcluster {

/// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(int64_t successes, int64_t trials);

struct ThresholdOptions {
    std::vector<int> sizes;
    std::vector<double> p_grid;
    int64_t trials = 0;
    uint64_t seed = 0;
    int threads = 1;
    int bootstrap_samples = 2000;
};

struct PointResult {
    int size;
    double p;
    int64_t trials;
    int64_t failures;
    double rate;
    double ci_low;
    double ci_high;
};

/// Crossing of the failure-rate curves of two lattice sizes.
struct PairCrossing {
    int small;
    int large;
    double p_cross;
    /// Bootstrap variance of p_cross.
    double variance;
};

struct ThresholdEstimate {
    double p_star = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::vector<int> sizes;
    int64_t trials_per_point = 0;
    std::optional<double> t_star_over_delta;
    std::vector<PointResult> points;
    std::vector<PairCrossing> crossings;
};

/// Raised when no pair of curves crosses inside the grid.
struct NoCrossingError : std::runtime_error {
    NoCrossingError(const std::string &what, std::string direction, std::vector<PointResult> points)
        : std::runtime_error(what), direction(std::move(direction)), points(std::move(points)) {
    }
    std::string direction;
    std::vector<PointResult> points;
};

/// Failure counts for every (size, p) pair. Trial t of grid point i for size L
/// draws from stream derive_key(seed, L, i, t), so counts do not depend on
/// the thread count.
std::vector<PointResult> run_grid(const ThresholdOptions &options);

/// Crossing of curve `large` above `small` by linear interpolation; when the
/// sign of the difference changes several times the median location is used.
std::optional<double> curve_crossing(const std::vector<double> &p_grid, const std::vector<double> &rate_small,
                                     const std::vector<double> &rate_large);

/// Inverse-variance weighted crossing estimate with a parametric bootstrap
/// 95% interval, from precomputed grid results.
ThresholdEstimate estimate_from_points(const ThresholdOptions &options, std::vector<PointResult> points);

/// run_grid followed by estimate_from_points.
ThresholdEstimate estimate_threshold(const ThresholdOptions &options);

struct TemperatureSolution {
    double t_over_delta;
    double p_eff;
    double residual;
};

/// Solves p_eff(T) = p_star by bisection, with p_eff from the thermal GHZ
/// channel mapped through map_noise. Requires 0 < p_star < 0.1.
TemperatureSolution threshold_temperature(const UnitCell &cell, double p_star, int n_cor);

}  // namespace tcluster

#endif
