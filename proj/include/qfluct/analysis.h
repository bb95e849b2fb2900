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

#ifndef QFLUCT_ANALYSIS_H
#define QFLUCT_ANALYSIS_H

#include <optional>
#include <span>
#include <vector>

namespace qfluct {

struct FitResult {
    double slope = 0;
    double intercept = 0;
    /// Root mean square of the residuals.
    double residual_rms = 0;
    size_t n_points = 0;
    /// Standard error of the slope from the residual variance (n - 2 dof).
    double slope_stderr = 0;

    double slope_t() const {
        return slope / slope_stderr;
    }
};

/// Ordinary least squares y = slope * x + intercept. Needs >= 2 points and
/// non-constant x (SingularFit otherwise); non-finite inputs are rejected.
FitResult linear_fit(std::span<const double> x, std::span<const double> y);

/// One curve y(p) at system size `size`.
struct ScalingCurve {
    double size = 0;
    std::vector<double> p;
    std::vector<double> y;
};

struct CollapseOptions {
    double pc_min = 0.05;
    double pc_max = 0.35;
    double pc_step = 0.005;
    double nu_min = 0.5;
    double nu_max = 2.5;
    double nu_step = 0.05;
    /// Minimum points each curve must contribute inside the overlap window.
    size_t min_points_per_curve = 3;
};

struct CollapseResult {
    double p_c = 0;
    double nu = 0;
    /// Mean squared residual of the collapsed points (see collapse_objective).
    double objective = 0;
    /// Grid resolution, the reported uncertainty.
    double p_c_step = 0;
    double nu_step = 0;
    /// Set when the optimum sits on the grid boundary.
    bool low_confidence = false;
};

/// Collapse quality of the curves under x = (p - p_c) * size^(1/nu): every
/// curve is restricted to the window where all curves overlap in x, and the
/// mean squared vertical distance of each windowed point from the
/// piecewise-linear interpolants of the other curves is returned. nullopt
/// when some curve has too few points in the window. Assumes increasing p.
std::optional<double> collapse_objective(std::span<const ScalingCurve> curves, double p_c, double nu,
                                         size_t min_points_per_curve = 3);

/// Exhaustive grid search of collapse_objective. Ties resolve to the
/// smallest p_c, then the smallest nu. Needs >= 3 curves with >= 8 points each.
CollapseResult fss_collapse(std::span<const ScalingCurve> curves, const CollapseOptions &options = {});

/// Crossing of two curves sampled on the same p grid: a linearly
/// interpolated root of their difference. With several sign changes the one
/// that best separates the positive from the negative side is returned.
std::optional<double> find_crossing(const ScalingCurve &a, const ScalingCurve &b);

}  // namespace qfluct

#endif
