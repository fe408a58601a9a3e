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

#include <cmath>

#include <gtest/gtest.h>

namespace tcluster {
namespace {

// Grid points with failure counts at their expected values, so the crossing
// location is known exactly.
std::vector<PointResult> synthetic_points(const ThresholdOptions &o, double p_cross) {
    std::vector<PointResult> out;
    for (size_t s = 0; s < o.sizes.size(); s++) {
        double slope = 2.0 + 2.0 * static_cast<double>(s);
        for (double p : o.p_grid) {
            double rate = 0.1 + slope * (p - p_cross);
            int64_t failures = std::llround(rate * static_cast<double>(o.trials));
            auto [lo, hi] = wilson_interval(failures, o.trials);
            out.push_back({o.sizes[s], p, o.trials, failures, static_cast<double>(failures) / o.trials, lo, hi});
        }
    }
    return out;
}

ThresholdOptions synthetic_options(int64_t trials) {
    ThresholdOptions o;
    o.sizes = {3, 5, 7};
    o.p_grid = {0.022, 0.026, 0.030, 0.034, 0.038};
    o.trials = trials;
    o.seed = 17;
    return o;
}

TEST(Wilson, TabulatedValues) {
    auto [lo0, hi0] = wilson_interval(0, 10);
    EXPECT_NEAR(lo0, 0, 1e-12);
    EXPECT_NEAR(hi0, 0.2775, 5e-5);
    auto [lo5, hi5] = wilson_interval(5, 10);
    EXPECT_NEAR(lo5, 0.2366, 5e-5);
    EXPECT_NEAR(hi5, 0.7634, 5e-5);
    EXPECT_THROW(wilson_interval(0, 0), std::invalid_argument);
}

TEST(CurveCrossing, LinearInterpolation) {
    std::vector<double> p{0.01, 0.02, 0.03};
    std::vector<double> small{0.10, 0.20, 0.30};
    std::vector<double> large{0.05, 0.21, 0.40};
    std::optional<double> c = curve_crossing(p, small, large);
    ASSERT_TRUE(c.has_value());
    // Difference goes -0.05 -> +0.01 between 0.01 and 0.02.
    EXPECT_NEAR(*c, 0.01 + 0.01 * 0.05 / 0.06, 1e-15);
    EXPECT_FALSE(curve_crossing(p, small, std::vector<double>{0.0, 0.1, 0.2}).has_value());
}

TEST(CurveCrossing, MedianOfSeveralSignChanges) {
    std::vector<double> p{1, 2, 3, 4, 5, 6};
    std::vector<double> small{0, 0, 0, 0, 0, 0};
    std::vector<double> large{-1, 1, -1, 1, -1, 1};
    std::optional<double> c = curve_crossing(p, small, large);
    ASSERT_TRUE(c.has_value());
    EXPECT_NEAR(*c, 3.5, 1e-15);
}

TEST(EstimateThreshold, SyntheticCrossing) {
    ThresholdOptions o = synthetic_options(1000000);
    ThresholdEstimate e = estimate_from_points(o, synthetic_points(o, 0.03));
    EXPECT_NEAR(e.p_star, 0.03, 2e-5);
    EXPECT_LE(e.ci_low, e.p_star);
    EXPECT_GE(e.ci_high, e.p_star);
    EXPECT_EQ(e.crossings.size(), 3u);
    EXPECT_EQ(e.trials_per_point, 1000000);
}

TEST(EstimateThreshold, CiShrinksWithDoubledTrials) {
    ThresholdOptions a = synthetic_options(20000);
    ThresholdOptions b = synthetic_options(40000);
    ThresholdEstimate ea = estimate_from_points(a, synthetic_points(a, 0.03));
    ThresholdEstimate eb = estimate_from_points(b, synthetic_points(b, 0.03));
    double ratio = (eb.ci_high - eb.ci_low) / (ea.ci_high - ea.ci_low);
    EXPECT_NEAR(ratio, 1 / std::sqrt(2.0), 0.2 / std::sqrt(2.0)) << ratio;
}

TEST(EstimateThreshold, NoCrossingReportsDirection) {
    ThresholdOptions o = synthetic_options(100000);
    // Crossing far to the right of the grid: larger lattices always fail less.
    try {
        estimate_from_points(o, synthetic_points(o, 0.08));
        FAIL() << "expected NoCrossingError";
    } catch (const NoCrossingError &e) {
        EXPECT_NE(e.direction.find("below"), std::string::npos) << e.direction;
        EXPECT_EQ(e.points.size(), 15u);
    }
    try {
        estimate_from_points(o, synthetic_points(o, 0.005));
        FAIL() << "expected NoCrossingError";
    } catch (const NoCrossingError &e) {
        EXPECT_NE(e.direction.find("above"), std::string::npos) << e.direction;
    }
}

TEST(EstimateThreshold, InputValidation) {
    ThresholdOptions o = synthetic_options(0);
    EXPECT_THROW(run_grid(o), std::invalid_argument);
    o.trials = 10;
    o.sizes = {3};
    EXPECT_THROW(run_grid(o), std::invalid_argument);
    o.sizes = {5, 3};
    EXPECT_THROW(run_grid(o), std::invalid_argument);
    o.sizes = {3, 5};
    o.p_grid = {0.01, 0.02};
    EXPECT_THROW(run_grid(o), std::invalid_argument);
    o.p_grid = {0.01, 0.03, 0.02};
    EXPECT_THROW(run_grid(o), std::invalid_argument);
}

TEST(RunGrid, IndependentOfThreadCount) {
    ThresholdOptions o;
    o.sizes = {3, 4};
    o.p_grid = {0.02, 0.04, 0.06};
    o.trials = 3000;
    o.seed = 99;
    o.threads = 1;
    std::vector<PointResult> one = run_grid(o);
    o.threads = 3;
    std::vector<PointResult> three = run_grid(o);
    ASSERT_EQ(one.size(), three.size());
    for (size_t i = 0; i < one.size(); i++) {
        EXPECT_EQ(one[i].failures, three[i].failures);
        EXPECT_LE(one[i].ci_low, one[i].rate);
        EXPECT_GE(one[i].ci_high, one[i].rate);
    }
    // Failure rate rises with p for every size.
    EXPECT_LT(one[0].failures, one[2].failures);
    EXPECT_LT(one[3].failures, one[5].failures);
}

class ThresholdTemperatureTest : public ::testing::Test {
   protected:
    static void SetUpTestSuite() {
        cell_ = new UnitCell(build_unit_cell());
    }
    static void TearDownTestSuite() {
        delete cell_;
    }
    static UnitCell *cell_;
};
UnitCell *ThresholdTemperatureTest::cell_ = nullptr;

TEST_F(ThresholdTemperatureTest, ResidualAndMonotonicity) {
    double prev = 0;
    for (double p : {1e-6, 1e-3, 0.01, 0.03, 0.06}) {
        TemperatureSolution s = threshold_temperature(*cell_, p, 2);
        EXPECT_LE(s.residual, 1e-10) << p;
        EXPECT_GT(s.t_over_delta, prev);
        prev = s.t_over_delta;
    }
    EXPECT_LT(threshold_temperature(*cell_, 1e-6, 2).t_over_delta, 0.08);
}

TEST_F(ThresholdTemperatureTest, MoreCorrelationLowersTemperature) {
    double t0 = threshold_temperature(*cell_, 0.03, 0).t_over_delta;
    double t4 = threshold_temperature(*cell_, 0.03, 4).t_over_delta;
    EXPECT_LT(t4, t0);
}

TEST_F(ThresholdTemperatureTest, DomainChecks) {
    EXPECT_THROW(threshold_temperature(*cell_, 0, 2), std::invalid_argument);
    EXPECT_THROW(threshold_temperature(*cell_, 0.1, 2), std::invalid_argument);
}

}  // namespace
}  // namespace tcluster
