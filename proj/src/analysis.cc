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

#include "qfluct/analysis.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qfluct/error.h"

namespace qfluct {

FitResult linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::InsufficientData, "fit inputs differ in length");
    }
    if (x.size() < 2) {
        throw Error(ErrorKind::InsufficientData, "fit needs at least 2 points");
    }
    for (size_t i = 0; i < x.size(); i++) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw Error(ErrorKind::SingularFit, "fit input is not finite");
        }
    }
    const double n = double(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); i++) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0) {
        throw Error(ErrorKind::SingularFit, "fit abscissae are all equal");
    }
    FitResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.n_points = x.size();
    double rss = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double e = y[i] - (r.slope * x[i] + r.intercept);
        rss += e * e;
    }
    r.residual_rms = std::sqrt(rss / n);
    r.slope_stderr = x.size() > 2 ? std::sqrt(rss / (n - 2) / sxx) : std::numeric_limits<double>::infinity();
    return r;
}

namespace {

void check_curves(std::span<const ScalingCurve> curves) {
    if (curves.size() < 3) {
        throw Error(ErrorKind::InsufficientData, "collapse needs at least 3 sizes");
    }
    for (const auto &c : curves) {
        if (c.p.size() != c.y.size() || c.p.size() < 8) {
            throw Error(ErrorKind::InsufficientData, "each curve needs at least 8 (p, y) points");
        }
        if (!std::is_sorted(c.p.begin(), c.p.end(), std::less_equal<double>())) {
            throw Error(ErrorKind::InvalidConfig, "curve p values must be strictly increasing");
        }
        if (!(c.size > 1)) {
            throw Error(ErrorKind::InvalidSize, "curve sizes must exceed 1");
        }
    }
}

// Linear interpolant of one curve at x, which must lie inside its range.
double interpolate(std::span<const double> xs, std::span<const double> ys, double x) {
    size_t k = size_t(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
    k = std::clamp<size_t>(k, 1, xs.size() - 1) - 1;
    double f = (x - xs[k]) / (xs[k + 1] - xs[k]);
    return ys[k] + f * (ys[k + 1] - ys[k]);
}

}  // namespace

std::optional<double> collapse_objective(std::span<const ScalingCurve> curves, double p_c, double nu,
                                         size_t min_points_per_curve) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> scaled(curves.size());
    for (size_t c = 0; c < curves.size(); c++) {
        double stretch = std::pow(curves[c].size, 1.0 / nu);
        for (double p : curves[c].p) {
            scaled[c].push_back((p - p_c) * stretch);
        }
        auto [mn, mx] = std::minmax_element(scaled[c].begin(), scaled[c].end());
        lo = std::max(lo, *mn);
        hi = std::min(hi, *mx);
    }
    if (!(hi > lo)) {
        return std::nullopt;
    }
    size_t fewest = std::numeric_limits<size_t>::max();
    for (const auto &x : scaled) {
        fewest = std::min(fewest, size_t(std::count_if(x.begin(), x.end(), [&](double v) { return v >= lo && v <= hi; })));
    }
    if (fewest < min_points_per_curve) {
        return std::nullopt;
    }
    // Each windowed point is compared against the linear interpolant of every
    // other curve, so the master curve is as fine as the data themselves.
    double total = 0;
    size_t terms = 0;
    for (size_t c = 0; c < curves.size(); c++) {
        for (size_t i = 0; i < scaled[c].size(); i++) {
            double x = scaled[c][i];
            if (x < lo || x > hi) {
                continue;
            }
            for (size_t o = 0; o < curves.size(); o++) {
                if (o != c) {
                    double d = curves[c].y[i] - interpolate(scaled[o], curves[o].y, x);
                    total += d * d;
                    terms++;
                }
            }
        }
    }
    return total / double(terms);
}

CollapseResult fss_collapse(std::span<const ScalingCurve> curves, const CollapseOptions &options) {
    check_curves(curves);
    const int n_pc = int(std::floor((options.pc_max - options.pc_min) / options.pc_step + 1e-9)) + 1;
    const int n_nu = int(std::floor((options.nu_max - options.nu_min) / options.nu_step + 1e-9)) + 1;
    CollapseResult best;
    best.objective = std::numeric_limits<double>::infinity();
    int best_i = -1, best_j = -1;
    for (int i = 0; i < n_pc; i++) {
        double p_c = options.pc_min + i * options.pc_step;
        for (int j = 0; j < n_nu; j++) {
            double nu = options.nu_min + j * options.nu_step;
            auto obj = collapse_objective(curves, p_c, nu, options.min_points_per_curve);
            if (obj && *obj < best.objective) {
                best.objective = *obj;
                best_i = i;
                best_j = j;
            }
        }
    }
    if (best_i < 0) {
        throw Error(ErrorKind::InsufficientData, "no collapse candidate leaves enough overlapping points");
    }
    best.p_c = options.pc_min + best_i * options.pc_step;
    best.nu = options.nu_min + best_j * options.nu_step;
    best.p_c_step = options.pc_step;
    best.nu_step = options.nu_step;
    best.low_confidence = best_i == 0 || best_i == n_pc - 1 || best_j == 0 || best_j == n_nu - 1;
    return best;
}

std::optional<double> find_crossing(const ScalingCurve &a, const ScalingCurve &b) {
    if (a.p != b.p || a.p.size() != a.y.size() || b.p.size() != b.y.size()) {
        throw Error(ErrorKind::InsufficientData, "crossing needs curves on one shared p grid");
    }
    const size_t m = a.p.size();
    std::vector<double> d(m);
    for (size_t i = 0; i < m; i++) {
        d[i] = b.y[i] - a.y[i];
    }
    std::optional<double> best;
    double best_score = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < m; i++) {
        if (d[i] == 0 && i > 0) {
            continue;
        }
        bool change = (d[i] > 0) != (d[i + 1] > 0) || d[i] == 0;
        if (!change) {
            continue;
        }
        double root = d[i] == d[i + 1] ? a.p[i] : a.p[i] + (a.p[i + 1] - a.p[i]) * d[i] / (d[i] - d[i + 1]);
        // Orientation follows the left side's sign; the score rewards roots
        // with that sign consistently to the left and the opposite to the right.
        double orient = d[i] > 0 || (d[i] == 0 && d[i + 1] < 0) ? 1.0 : -1.0;
        double score = 0;
        for (size_t k = 0; k < m; k++) {
            score += (a.p[k] < root ? orient : -orient) * d[k];
        }
        if (score > best_score) {
            best_score = score;
            best = root;
        }
    }
    return best;
}

}  // namespace qfluct
