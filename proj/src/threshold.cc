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

#include "tcluster/threshold.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include <boost/random/binomial_distribution.hpp>

#include "tcluster/decoder.h"
#include "tcluster/noise.h"
#include "tcluster/rng.h"
#include "tcluster/zchannel.h"

namespace tcluster {

namespace {

constexpr double kWilsonZ = 1.959963984540054;
constexpr uint64_t kBootstrapStream = 0xB0075724Aull;

void validate(const ThresholdOptions &o) {
    if (o.sizes.size() < 2) {
        throw std::invalid_argument("estimate_threshold: at least two lattice sizes are required");
    }
    if (o.p_grid.size() < 3) {
        throw std::invalid_argument("estimate_threshold: at least three grid points are required");
    }
    if (o.trials < 1) {
        throw std::invalid_argument("estimate_threshold: trials must be at least 1");
    }
    if (o.threads < 1) {
        throw std::invalid_argument("estimate_threshold: threads must be at least 1");
    }
    if (o.bootstrap_samples < 2) {
        throw std::invalid_argument("estimate_threshold: at least two bootstrap samples are required");
    }
    if (!std::is_sorted(o.sizes.begin(), o.sizes.end()) ||
        std::adjacent_find(o.sizes.begin(), o.sizes.end()) != o.sizes.end()) {
        throw std::invalid_argument("estimate_threshold: sizes must be strictly ascending");
    }
    if (!std::is_sorted(o.p_grid.begin(), o.p_grid.end()) ||
        std::adjacent_find(o.p_grid.begin(), o.p_grid.end()) != o.p_grid.end()) {
        throw std::invalid_argument("estimate_threshold: p grid must be strictly ascending");
    }
    for (double p : o.p_grid) {
        if (!(p > 0 && p <= 0.5)) {
            throw std::invalid_argument("estimate_threshold: p grid values must lie in (0, 1/2]");
        }
    }
}

int64_t count_failures(const TorusLattice &lattice, double p, uint64_t seed, size_t grid_index, int64_t trials,
                       int threads) {
    auto work = [&](int64_t first, int64_t stride) {
        int64_t failures = 0;
        for (int64_t t = first; t < trials; t += stride) {
            uint64_t key = derive_key({seed, static_cast<uint64_t>(lattice.size()), grid_index,
                                       static_cast<uint64_t>(t)});
            failures += trial_fails(lattice, p, key).failed() ? 1 : 0;
        }
        return failures;
    };
    if (threads <= 1 || trials < 2) {
        return work(0, 1);
    }
    std::vector<int64_t> partial(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (int k = 0; k < threads; k++) {
            pool.emplace_back([&, k]() {
                try {
                    partial[k] = work(k, threads);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            });
        }
    }
    for (const std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    int64_t total = 0;
    for (int64_t c : partial) {
        total += c;
    }
    return total;
}

double percentile(std::vector<double> sorted, double q) {
    std::sort(sorted.begin(), sorted.end());
    double pos = q * static_cast<double>(sorted.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(pos));
    size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1 - frac) + sorted[hi] * frac;
}

std::string describe_direction(const ThresholdOptions &o, const std::vector<PointResult> &points) {
    size_t np = o.p_grid.size();
    int above = 0;
    int below = 0;
    for (size_t a = 0; a + 1 < o.sizes.size(); a++) {
        for (size_t i = 0; i < np; i++) {
            double d = points[(a + 1) * np + i].rate - points[a * np + i].rate;
            if (d > 0) {
                above++;
            } else if (d < 0) {
                below++;
            }
        }
    }
    if (above == 0) {
        return "larger lattices never fail more often: the grid lies below the threshold";
    }
    if (below == 0) {
        return "larger lattices always fail more often: the grid lies above the threshold";
    }
    return "curve ordering is mixed without a clean crossing: increase trials";
}

}  // namespace

std::pair<double, double> wilson_interval(int64_t successes, int64_t trials) {
    if (trials <= 0) {
        throw std::invalid_argument("wilson_interval: trials must be positive");
    }
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = kWilsonZ * kWilsonZ;
    double denom = 1 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = kWilsonZ / denom * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::vector<PointResult> run_grid(const ThresholdOptions &options) {
    validate(options);
    std::vector<PointResult> points;
    for (int size : options.sizes) {
        TorusLattice lattice(size);
        for (size_t i = 0; i < options.p_grid.size(); i++) {
            double p = options.p_grid[i];
            int64_t failures = count_failures(lattice, p, options.seed, i, options.trials, options.threads);
            auto [lo, hi] = wilson_interval(failures, options.trials);
            points.push_back({size, p, options.trials, failures,
                              static_cast<double>(failures) / static_cast<double>(options.trials), lo, hi});
        }
    }
    return points;
}

std::optional<double> curve_crossing(const std::vector<double> &p_grid, const std::vector<double> &rate_small,
                                     const std::vector<double> &rate_large) {
    std::vector<double> found;
    for (size_t i = 0; i + 1 < p_grid.size(); i++) {
        double d0 = rate_large[i] - rate_small[i];
        double d1 = rate_large[i + 1] - rate_small[i + 1];
        if (d0 <= 0 && d1 > 0) {
            found.push_back(p_grid[i] + (p_grid[i + 1] - p_grid[i]) * (-d0) / (d1 - d0));
        }
    }
    if (found.empty()) {
        return std::nullopt;
    }
    std::sort(found.begin(), found.end());
    size_t mid = found.size() / 2;
    return found.size() % 2 ? found[mid] : (found[mid - 1] + found[mid]) / 2;
}

ThresholdEstimate estimate_from_points(const ThresholdOptions &options, std::vector<PointResult> points) {
    validate(options);
    size_t ns = options.sizes.size();
    size_t np = options.p_grid.size();
    if (points.size() != ns * np) {
        throw std::invalid_argument("estimate_from_points: point count does not match the grid");
    }
    auto rates_of = [&](const std::vector<int64_t> &failures, size_t s) {
        std::vector<double> r(np);
        for (size_t i = 0; i < np; i++) {
            r[i] = static_cast<double>(failures[s * np + i]) / static_cast<double>(points[s * np + i].trials);
        }
        return r;
    };
    std::vector<int64_t> observed(points.size());
    for (size_t k = 0; k < points.size(); k++) {
        observed[k] = points[k].failures;
    }

    struct Pair {
        size_t a;
        size_t b;
        double p;
        std::vector<std::optional<double>> replicas;
    };
    std::vector<Pair> pairs;
    for (size_t a = 0; a < ns; a++) {
        for (size_t b = a + 1; b < ns; b++) {
            std::optional<double> c = curve_crossing(options.p_grid, rates_of(observed, a), rates_of(observed, b));
            if (c) {
                pairs.push_back({a, b, *c, {}});
            }
        }
    }
    if (pairs.empty()) {
        std::string direction = describe_direction(options, points);
        throw NoCrossingError("estimate_threshold: no crossing detected in the grid (" + direction + ")", direction,
                              std::move(points));
    }

    CounterRng rng(derive_key({options.seed, kBootstrapStream}));
    std::vector<int64_t> resampled(points.size());
    for (int rep = 0; rep < options.bootstrap_samples; rep++) {
        for (size_t k = 0; k < points.size(); k++) {
            double rate = static_cast<double>(points[k].failures) / static_cast<double>(points[k].trials);
            boost::random::binomial_distribution<int64_t, double> draw(points[k].trials, rate);
            resampled[k] = draw(rng);
        }
        for (Pair &pair : pairs) {
            pair.replicas.push_back(
                curve_crossing(options.p_grid, rates_of(resampled, pair.a), rates_of(resampled, pair.b)));
        }
    }

    ThresholdEstimate out;
    out.sizes = options.sizes;
    out.trials_per_point = options.trials;
    std::vector<double> weights;
    double weighted = 0;
    double weight_sum = 0;
    for (const Pair &pair : pairs) {
        double mean = 0;
        int count = 0;
        for (const auto &r : pair.replicas) {
            if (r) {
                mean += *r;
                count++;
            }
        }
        double variance = 0;
        if (count >= 2) {
            mean /= count;
            for (const auto &r : pair.replicas) {
                if (r) {
                    variance += (*r - mean) * (*r - mean);
                }
            }
            variance /= count - 1;
        }
        // Floor keeps a degenerate (noise-free) pair from taking all the weight.
        double w = 1 / std::max(variance, 1e-12);
        weights.push_back(w);
        weighted += w * pair.p;
        weight_sum += w;
        out.crossings.push_back({options.sizes[pair.a], options.sizes[pair.b], pair.p, variance});
    }
    out.p_star = weighted / weight_sum;

    std::vector<double> combined;
    for (int rep = 0; rep < options.bootstrap_samples; rep++) {
        double num = 0;
        double den = 0;
        for (size_t k = 0; k < pairs.size(); k++) {
            const auto &r = pairs[k].replicas[rep];
            if (r) {
                num += weights[k] * *r;
                den += weights[k];
            }
        }
        if (den > 0) {
            combined.push_back(num / den);
        }
    }
    if (combined.size() >= 2) {
        out.ci_low = std::min(out.p_star, percentile(combined, 0.025));
        out.ci_high = std::max(out.p_star, percentile(combined, 0.975));
    } else {
        out.ci_low = out.ci_high = out.p_star;
    }
    out.points = std::move(points);
    return out;
}

ThresholdEstimate estimate_threshold(const ThresholdOptions &options) {
    return estimate_from_points(options, run_grid(options));
}

TemperatureSolution threshold_temperature(const UnitCell &cell, double p_star, int n_cor) {
    if (!(p_star > 0 && p_star < 0.1)) {
        throw std::invalid_argument("threshold_temperature: p_star must lie in (0, 0.1)");
    }
    auto p_eff = [&](double t) { return map_noise(q_of_temperature(cell, t), n_cor).p_eff; };

    // p_eff vanishes like exp(-delta/T), so a low bracket end is always below p_star.
    double lo = 0.01;
    if (p_eff(lo) >= p_star) {
        throw std::domain_error("threshold_temperature: p_star is below p_eff at the lowest bracket temperature");
    }
    double hi = lo;
    double p_hi = 0;
    try {
        do {
            hi += 0.05;
            p_hi = p_eff(hi);
        } while (p_hi < p_star && hi < 2);
    } catch (const std::exception &e) {
        throw std::domain_error(std::string("threshold_temperature: bracket failure: ") + e.what());
    }
    if (p_hi < p_star) {
        throw std::domain_error("threshold_temperature: no temperature up to 2 delta reaches p_star");
    }

    constexpr int kMonotoneSamples = 16;
    double prev = -1;
    for (int k = 0; k <= kMonotoneSamples; k++) {
        double v = p_eff(lo + (hi - lo) * k / kMonotoneSamples);
        if (v < prev) {
            throw std::domain_error("threshold_temperature: p_eff is not monotone on the bracket");
        }
        prev = v;
    }

    for (int iter = 0; iter < 200 && hi - lo > 1e-15; iter++) {
        double mid = (lo + hi) / 2;
        if (p_eff(mid) < p_star) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double t = (lo + hi) / 2;
    double value = p_eff(t);
    return {t, value, std::abs(value - p_star)};
}

}  // namespace tcluster
