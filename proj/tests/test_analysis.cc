// Copyright 2026 The qfluct Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qfluct/analysis.h"
#include "qfluct/error.h"

namespace qfluct {
namespace {

std::vector<ScalingCurve> planted(double p_c, double nu, double noise, uint64_t seed, double (*shape)(double)) {
    std::mt19937_64 g(seed);
    std::normal_distribution<double> gauss;
    std::vector<ScalingCurve> curves;
    for (double size : {8.0, 12.0, 16.0}) {
        ScalingCurve c{size, {}, {}};
        for (int k = 0; k <= 15; k++) {
            double p = 0.05 + 0.02 * k;
            double y = shape((p - p_c) * std::pow(size, 1 / nu));
            c.p.push_back(p);
            c.y.push_back(y * (1 + noise * gauss(g)));
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

double logistic(double x) {
    return 1 / (1 + std::exp(2 * x));
}
double gaussian_tail(double x) {
    return 0.5 * std::erfc(x);
}
double arctan_shape(double x) {
    return 1.5 - std::atan(3 * x);
}

TEST(LinearFit, ExactLine) {
    std::vector<double> x{0, 1, 2, 3, 4}, y;
    for (double v : x) {
        y.push_back(0.32 + 0.13 * v);
    }
    auto f = linear_fit(x, y);
    EXPECT_NEAR(f.slope, 0.13, 1e-14);
    EXPECT_NEAR(f.intercept, 0.32, 1e-14);
    EXPECT_LT(f.residual_rms, 1e-14);
    EXPECT_EQ(f.n_points, 5u);
}

TEST(LinearFit, StandardErrorMatchesTextbook) {
    std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 5};
    auto f = linear_fit(x, y);
    EXPECT_DOUBLE_EQ(f.slope, 1.1);
    EXPECT_DOUBLE_EQ(f.intercept, 0.0);
    // residuals -0.1, 0.8, -1.3, 0.6 -> rss 2.7, sxx 5
    EXPECT_NEAR(f.residual_rms, std::sqrt(2.7 / 4), 1e-14);
    EXPECT_NEAR(f.slope_stderr, std::sqrt(2.7 / 2 / 5), 1e-14);
    EXPECT_NEAR(f.slope_t(), 1.1 / std::sqrt(0.27), 1e-12);
}

TEST(LinearFit, PointOrderDoesNotMatter) {
    std::vector<double> x{0, 1, 2, 3, 4, 5}, y{0.3, 0.5, 0.4, 0.9, 1.1, 1.0};
    auto a = linear_fit(x, y);
    std::reverse(x.begin(), x.end());
    std::reverse(y.begin(), y.end());
    std::swap(x[1], x[4]);
    std::swap(y[1], y[4]);
    auto b = linear_fit(x, y);
    EXPECT_NEAR(a.slope, b.slope, 1e-14);
    EXPECT_NEAR(a.intercept, b.intercept, 1e-14);
    EXPECT_NEAR(a.residual_rms, b.residual_rms, 1e-14);
}

TEST(LinearFit, Failures) {
    auto kind = [](std::vector<double> x, std::vector<double> y) {
        try {
            linear_fit(x, y);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    EXPECT_EQ(kind({1}, {1}), ErrorKind::InsufficientData);
    EXPECT_EQ(kind({1, 2}, {1}), ErrorKind::InsufficientData);
    EXPECT_EQ(kind({2, 2, 2}, {1, 2, 3}), ErrorKind::SingularFit);
    EXPECT_EQ(kind({1, 2, 3}, {1, std::numeric_limits<double>::quiet_NaN(), 3}), ErrorKind::SingularFit);
    EXPECT_EQ(kind({1, 2, std::numeric_limits<double>::infinity()}, {1, 2, 3}), ErrorKind::SingularFit);
}

TEST(Collapse, RecoversPlantedParameters) {
    for (auto shape : {logistic, gaussian_tail, arctan_shape}) {
        for (double noise : {0.0, 0.005, 0.01}) {
            auto curves = planted(0.19, 1.25, noise, 11, shape);
            auto r = fss_collapse(curves);
            EXPECT_NEAR(r.p_c, 0.19, 0.02) << "noise " << noise;
            EXPECT_NEAR(r.nu, 1.25, 0.15) << "noise " << noise;
            EXPECT_FALSE(r.low_confidence);
            EXPECT_EQ(r.p_c_step, 0.005);
            EXPECT_EQ(r.nu_step, 0.05);
        }
    }
}

TEST(Collapse, ObjectiveIsSmallestNearTruth) {
    auto curves = planted(0.2, 1.0, 0.0, 1, logistic);
    auto at_truth = collapse_objective(curves, 0.2, 1.0);
    auto off = collapse_objective(curves, 0.25, 1.0);
    ASSERT_TRUE(at_truth && off);
    EXPECT_LT(*at_truth, *off);
}

TEST(Collapse, VerticalScalingLeavesOptimumUnchanged) {
    auto curves = planted(0.21, 1.1, 0.01, 4, gaussian_tail);
    auto base = fss_collapse(curves);
    for (auto &c : curves) {
        for (auto &y : c.y) {
            y *= 7.5;
        }
    }
    auto scaled = fss_collapse(curves);
    EXPECT_EQ(scaled.p_c, base.p_c);
    EXPECT_EQ(scaled.nu, base.nu);
    EXPECT_NEAR(scaled.objective, 7.5 * 7.5 * base.objective, 1e-9 * scaled.objective);
}

TEST(Collapse, OptimumIsTheGridMinimum) {
    auto curves = planted(0.19, 1.25, 0.01, 2, logistic);
    CollapseOptions coarse;
    coarse.pc_step = 0.01;
    coarse.nu_step = 0.1;
    auto r = fss_collapse(curves, coarse);
    for (int i = 0; i <= 30; i++) {
        for (int j = 0; j <= 20; j++) {
            if (auto obj = collapse_objective(curves, coarse.pc_min + i * coarse.pc_step, coarse.nu_min + j * coarse.nu_step)) {
                EXPECT_LE(r.objective, *obj + 1e-15);
            }
        }
    }
}

TEST(Collapse, UnsortedGridRejected) {
    auto curves = planted(0.19, 1.25, 0.0, 1, logistic);
    std::swap(curves[0].p[2], curves[0].p[3]);
    EXPECT_THROW(fss_collapse(curves), Error);
}

TEST(Collapse, BoundaryOptimumIsFlagged) {
    auto curves = planted(0.19, 1.25, 0.0, 1, logistic);
    CollapseOptions narrow;
    narrow.pc_min = 0.25;
    narrow.pc_max = 0.30;
    auto r = fss_collapse(curves, narrow);
    EXPECT_TRUE(r.low_confidence);
    EXPECT_NEAR(r.p_c, 0.25, 1e-12);
}

TEST(Collapse, NeedsThreeSizesOfEightPoints) {
    auto kind = [](std::vector<ScalingCurve> curves) {
        try {
            fss_collapse(curves);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    auto curves = planted(0.19, 1.25, 0.0, 1, logistic);
    EXPECT_EQ(kind({curves[0], curves[1]}), ErrorKind::InsufficientData);
    for (auto &c : curves) {
        c.p.resize(7);
        c.y.resize(7);
    }
    EXPECT_EQ(kind(curves), ErrorKind::InsufficientData);
}

TEST(Collapse, SizeIndependentCurvesGiveLowConfidence) {
    std::vector<ScalingCurve> curves;
    for (double size : {8.0, 12.0, 16.0}) {
        ScalingCurve c{size, {}, {}};
        for (int k = 0; k <= 15; k++) {
            c.p.push_back(0.05 + 0.02 * k);
            c.y.push_back(1 - 2 * c.p.back());
        }
        curves.push_back(std::move(c));
    }
    EXPECT_TRUE(fss_collapse(curves).low_confidence);
}

TEST(Crossing, LinearCurves) {
    ScalingCurve a{8, {0.1, 0.2, 0.3}, {1.0, 0.5, 0.0}};
    ScalingCurve b{12, {0.1, 0.2, 0.3}, {1.5, 0.5, -0.5}};
    auto c = find_crossing(a, b);
    ASSERT_TRUE(c);
    EXPECT_NEAR(*c, 0.2, 1e-12);
    ScalingCurve d{12, {0.1, 0.2, 0.3}, {1.2, 0.6, -0.1}};
    // d - a = 0.2, 0.1, -0.1 -> root at 0.25
    EXPECT_NEAR(*find_crossing(a, d), 0.25, 1e-12);
}

TEST(Crossing, NoneWhenCurvesDoNotCross) {
    ScalingCurve a{8, {0.1, 0.2, 0.3}, {1.0, 0.5, 0.0}};
    ScalingCurve b{12, {0.1, 0.2, 0.3}, {2.0, 1.5, 1.0}};
    EXPECT_FALSE(find_crossing(a, b));
}

TEST(Crossing, PrefersTheSeparatingRootOverNoise) {
    // A spurious wiggle at the left edge; the real crossing is at 0.25.
    ScalingCurve a{8, {0.05, 0.1, 0.15, 0.2, 0.3, 0.4}, {1.0, 0.9, 0.8, 0.6, 0.3, 0.1}};
    ScalingCurve b{12, {0.05, 0.1, 0.15, 0.2, 0.3, 0.4}, {0.99, 0.91, 0.9, 0.7, 0.2, 0.0}};
    auto c = find_crossing(a, b);
    ASSERT_TRUE(c);
    EXPECT_NEAR(*c, 0.25, 1e-12);
}

TEST(Crossing, PlantedCurvesCrossAtCriticalPoint) {
    auto curves = planted(0.19, 1.25, 0.0, 1, logistic);
    for (size_t i = 0; i + 1 < curves.size(); i++) {
        auto c = find_crossing(curves[i], curves[i + 1]);
        ASSERT_TRUE(c);
        EXPECT_NEAR(*c, 0.19, 0.005);
    }
}

}  // namespace
}  // namespace qfluct
