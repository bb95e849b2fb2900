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

#include "qfluct/experiments.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <limits>
#include <mutex>
#include <thread>

#include "qfluct/circuits.h"
#include "qfluct/error.h"
#include "qfluct/rng.h"
#include "qfluct/simulate.h"
#include "qfluct/statevector.h"
#include "qfluct/tableau.h"
#include "qfluct/theory.h"

namespace qfluct {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double neg_ln(double v) {
    return v > 0 ? -std::log(v) : (v == 0 ? std::numeric_limits<double>::infinity() : kNaN);
}

uint64_t kind_code(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Tdoped:
            return 1;
        case ExperimentKind::Mipt:
            return 2;
        case ExperimentKind::Kurtosis:
            return 3;
        case ExperimentKind::Renyi4:
            return 4;
        case ExperimentKind::Oracle:
            return 5;
    }
    return 0;
}

template <class F>
std::vector<double> column_of(const std::vector<SampleRecord> &records, F field) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto &r : records) {
        out.push_back(field(r));
    }
    return out;
}

// Fits y against x on the rows of `summary` where both are finite.
void add_fits(const Table &summary, const std::string &x, const std::vector<std::string> &ys, Table &fits) {
    std::vector<int64_t> sizes;
    for (size_t r = 0; r < summary.size(); r++) {
        int64_t n = int64_t(summary.number(r, "n"));
        if (sizes.empty() || sizes.back() != n) {
            sizes.push_back(n);
        }
    }
    for (int64_t n : sizes) {
        for (const auto &y : ys) {
            std::vector<double> xv, yv;
            for (size_t r = 0; r < summary.size(); r++) {
                if (int64_t(summary.number(r, "n")) != n) {
                    continue;
                }
                double a = summary.number(r, x), b = summary.number(r, y);
                if (std::isfinite(a) && std::isfinite(b)) {
                    xv.push_back(a);
                    yv.push_back(b);
                }
            }
            std::vector<Cell> row = {n, y};
            try {
                FitResult f = linear_fit(xv, yv);
                row.insert(row.end(), {f.slope, f.intercept, f.residual_rms, f.slope_stderr, f.slope_t(),
                                       int64_t(f.n_points), std::string("ok")});
            } catch (const Error &e) {
                row.insert(row.end(), {kNaN, kNaN, kNaN, kNaN, kNaN, int64_t(xv.size()), std::string(error_kind_name(e.kind()))});
            }
            fits.add_row(std::move(row));
        }
    }
}

Table fits_table() {
    return Table({"n", "quantity", "slope", "intercept", "residual_rms", "slope_stderr", "slope_t", "n_points", "status"});
}

Table records_table(const std::vector<std::vector<SampleRecord>> &groups, bool mipt) {
    std::vector<std::string> cols = {"n"};
    if (mipt) {
        cols.insert(cols.end(), {"theta", "p_m"});
    } else {
        cols.push_back("n_t");
    }
    cols.insert(cols.end(), {"instance", "I2", "S2_A", "S2_B", "S2_AB", "S4_AB", "Sz_A", "Sz_B", "Sz_AB"});
    Table t(cols);
    for (const auto &g : groups) {
        for (const auto &r : g) {
            std::vector<Cell> row = {int64_t(r.n)};
            if (mipt) {
                row.insert(row.end(), {r.theta, r.p_m});
            } else {
                row.push_back(int64_t(r.n_t));
            }
            row.insert(row.end(), {int64_t(r.instance_index), r.I2, r.S2_A, r.S2_B, r.S2_AB, r.S4_AB, r.Sz_A, r.Sz_B, r.Sz_AB});
            t.add_row(std::move(row));
        }
    }
    return t;
}

PlotSpec plot_vs(const Table &t, const std::string &x, const std::string &y, const std::string &title) {
    PlotSpec spec = plot_from_table(t, x, y, "n");
    spec.title = title;
    return spec;
}

bool use_statevector_tdoped(const EnsembleConfig &config) {
    return config.backend != BackendChoice::Tableau;
}

}  // namespace

void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, std::max<size_t>(count, 1));
    if (threads <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; t++) {
        pool.emplace_back(worker);
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

const Table &ExperimentResult::table(const std::string &suffix) const {
    for (const auto &[name, t] : tables) {
        if (name == suffix) {
            return t;
        }
    }
    throw Error(ErrorKind::InvalidConfig, "experiment produced no '" + suffix + "' table");
}

std::pair<QubitSubset, QubitSubset> tdoped_subsystems(size_t n, double fraction) {
    uint32_t k = uint32_t(std::lround(fraction * double(n)));
    return {QubitSubset::range(0, k), QubitSubset::range(uint32_t(n) - k, uint32_t(n))};
}

std::pair<QubitSubset, QubitSubset> mipt_subsystems(size_t n, double fraction) {
    uint32_t k = uint32_t(std::lround(fraction * double(n)));
    uint32_t half = uint32_t(n / 2);
    return {QubitSubset::range(0, k), QubitSubset::range(half, half + k)};
}

uint64_t instance_seed(uint64_t master, ExperimentKind kind, size_t n, size_t param_index, size_t instance,
                       uint64_t stream) {
    return derive_seed({master, kind_code(kind), uint64_t(n), uint64_t(param_index), uint64_t(instance), stream});
}

std::vector<SampleRecord> collect_tdoped(const EnsembleConfig &config, size_t n, int n_t, size_t param_index) {
    auto [a, b] = tdoped_subsystems(n, config.subsystem_fraction);
    std::vector<SampleRecord> out(config.samples);
    const TdopedOptions options{config.pairing, config.block};
    const bool dense = use_statevector_tdoped(config);
    parallel_for(config.samples, config.threads, [&](size_t i) {
        Rng gen(instance_seed(config.master_seed, config.kind, n, param_index, i));
        Rng meas(instance_seed(config.master_seed, config.kind, n, param_index, i, 1));
        Circuit c = gen_tdoped(n, n_t, gen, options);
        SampleRecord &r = out[i];
        if (dense) {
            PureState s(n, config.statevector_cap);
            run_ops(s, c.ops, meas);
            measure_record(s, a, b, r);
        } else {
            StabilizerTableau t(n);
            run_ops(t, c.ops, meas);
            measure_record(t, a, b, r);
        }
        r.instance_index = i;
        r.n_t = n_t;
    });
    return out;
}

std::vector<SampleRecord> collect_mipt(const EnsembleConfig &config, size_t n, double theta, double p_m,
                                       size_t param_index) {
    auto [a, b] = mipt_subsystems(n, config.subsystem_fraction);
    std::vector<SampleRecord> out(config.instances);
    const bool dense = config.backend == BackendChoice::Statevector || theta != 0;
    parallel_for(config.instances, config.threads, [&](size_t i) {
        Rng gen(instance_seed(config.master_seed, ExperimentKind::Mipt, n, param_index, i));
        Rng meas(instance_seed(config.master_seed, ExperimentKind::Mipt, n, param_index, i, 1));
        std::vector<GateOp> ops;
        SampleRecord &r = out[i];
        auto evolve = [&](auto &state) {
            for (int cycle = 0; cycle < config.cycles; cycle++) {
                ops.clear();
                gen_mipt_cycle(n, theta, p_m, gen, ops);
                run_ops(state, ops, meas);
            }
            measure_record(state, a, b, r);
        };
        if (dense) {
            PureState s(n, config.statevector_cap);
            evolve(s);
        } else {
            StabilizerTableau t(n);
            evolve(t);
        }
        r.instance_index = i;
        r.theta = theta;
        r.p_m = p_m;
    });
    return out;
}

ExperimentResult run_tdoped(const EnsembleConfig &config) {
    validate(config);
    Table summary({"n", "n_t", "samples", "mean_I2", "delta_I2", "neg_ln_delta_I2", "mean_S2_A", "delta_S2_A",
                   "neg_ln_delta_S2_A", "mean_S2_B", "delta_S2_B", "neg_ln_delta_S2_B", "mean_S2_AB", "delta_S2_AB",
                   "neg_ln_delta_S2_AB", "mean_S4_AB", "delta_S4_AB", "neg_ln_delta_S4_AB", "neg_ln_mean_S4_AB"});
    std::vector<std::vector<SampleRecord>> groups;
    for (size_t n : config.qubits) {
        auto nts = config.nt_values();
        for (size_t k = 0; k < nts.size(); k++) {
            auto recs = collect_tdoped(config, n, nts[k], k);
            std::vector<Cell> row = {int64_t(n), int64_t(nts[k]), int64_t(recs.size())};
            for (auto field : {&SampleRecord::I2, &SampleRecord::S2_A, &SampleRecord::S2_B, &SampleRecord::S2_AB,
                               &SampleRecord::S4_AB}) {
                auto xs = column_of(recs, [&](const SampleRecord &r) { return r.*field; });
                double d = fluctuation(xs);
                row.insert(row.end(), {mean(xs), d, neg_ln(d)});
            }
            row.push_back(neg_ln(std::get<double>(row[15])));
            summary.add_row(std::move(row));
            groups.push_back(std::move(recs));
        }
    }
    Table fits = fits_table();
    add_fits(summary, "n_t",
             {"neg_ln_delta_I2", "neg_ln_delta_S2_A", "neg_ln_delta_S2_B", "neg_ln_delta_S2_AB", "neg_ln_delta_S4_AB",
              "neg_ln_mean_S4_AB"},
             fits);
    ExperimentResult res;
    res.name = "tdoped";
    res.plots.push_back({"delta_I2", plot_vs(summary, "n_t", "neg_ln_delta_I2", "-ln delta(I2) vs T count")});
    res.plots.push_back({"delta_S2_AB", plot_vs(summary, "n_t", "neg_ln_delta_S2_AB", "-ln delta(S2_AB) vs T count")});
    res.tables.push_back({"summary", std::move(summary)});
    res.tables.push_back({"fits", std::move(fits)});
    res.tables.push_back({"records", records_table(groups, false)});
    return res;
}

ExperimentResult run_renyi4(const EnsembleConfig &config) {
    validate(config);
    Table summary({"n", "n_t", "samples", "mean_S4_AB", "delta_S4_AB", "neg_ln_delta_S4_AB", "neg_ln_mean_S4_AB"});
    std::vector<std::vector<SampleRecord>> groups;
    for (size_t n : config.qubits) {
        auto nts = config.nt_values();
        for (size_t k = 0; k < nts.size(); k++) {
            auto recs = collect_tdoped(config, n, nts[k], k);
            auto xs = column_of(recs, [](const SampleRecord &r) { return r.S4_AB; });
            double m = mean(xs), d = fluctuation(xs);
            summary.add_row({int64_t(n), int64_t(nts[k]), int64_t(recs.size()), m, d, neg_ln(d), neg_ln(m)});
            groups.push_back(std::move(recs));
        }
    }
    Table fits = fits_table();
    add_fits(summary, "n_t", {"neg_ln_delta_S4_AB", "neg_ln_mean_S4_AB"}, fits);
    ExperimentResult res;
    res.name = "renyi4";
    res.plots.push_back({"delta_S4", plot_vs(summary, "n_t", "neg_ln_delta_S4_AB", "-ln delta(S4_AB) vs T count")});
    res.tables.push_back({"summary", std::move(summary)});
    res.tables.push_back({"fits", std::move(fits)});
    res.tables.push_back({"records", records_table(groups, false)});
    return res;
}

ExperimentResult run_kurtosis(const EnsembleConfig &config) {
    validate(config);
    Table summary({"n", "n_t", "samples", "kurt_A", "kurt_B", "kurt_AB", "kurt_combo", "neg_ln_kurt_combo", "degenerate"});
    std::vector<std::vector<SampleRecord>> groups;
    for (size_t n : config.qubits) {
        auto nts = config.nt_values();
        for (size_t k = 0; k < nts.size(); k++) {
            auto recs = collect_tdoped(config, n, nts[k], k);
            std::vector<Cell> row = {int64_t(n), int64_t(nts[k]), int64_t(recs.size())};
            try {
                double ka = kurtosis(column_of(recs, [](const SampleRecord &r) { return r.Sz_A; }));
                double kb = kurtosis(column_of(recs, [](const SampleRecord &r) { return r.Sz_B; }));
                double kab = kurtosis(column_of(recs, [](const SampleRecord &r) { return r.Sz_AB; }));
                double combo = kurt_combo(ka, kb, kab);
                row.insert(row.end(), {ka, kb, kab, combo, neg_ln(combo), int64_t(0)});
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::DegenerateSample) {
                    throw;
                }
                row.insert(row.end(), {kNaN, kNaN, kNaN, kNaN, kNaN, int64_t(1)});
            }
            summary.add_row(std::move(row));
            groups.push_back(std::move(recs));
        }
    }
    Table fits = fits_table();
    add_fits(summary, "n_t", {"neg_ln_kurt_combo"}, fits);
    ExperimentResult res;
    res.name = "kurtosis";
    res.plots.push_back({"combo", plot_vs(summary, "n_t", "neg_ln_kurt_combo", "-ln Kurt(S_z)_{A,B} vs T count")});
    res.tables.push_back({"summary", std::move(summary)});
    res.tables.push_back({"fits", std::move(fits)});
    res.tables.push_back({"records", records_table(groups, false)});
    return res;
}

ExperimentResult run_mipt(const EnsembleConfig &config) {
    validate(config);
    Table summary({"n", "theta", "p_m", "instances", "mean_I2", "se_I2", "F_AB"});
    Table crossings({"theta", "n_small", "n_large", "p_cross"});
    Table collapse({"theta", "p_c", "nu", "objective", "p_c_step", "nu_step", "status"});
    std::vector<std::vector<SampleRecord>> groups;
    const size_t n_pm = config.pm_grid.size();
    for (size_t ti = 0; ti < config.thetas.size(); ti++) {
        double theta = config.thetas[ti];
        std::vector<ScalingCurve> curves;
        for (size_t n : config.qubits) {
            ScalingCurve curve;
            curve.size = double(n);
            for (size_t pi = 0; pi < n_pm; pi++) {
                double p_m = config.pm_grid[pi];
                auto recs = collect_mipt(config, n, theta, p_m, ti * n_pm + pi);
                auto xs = column_of(recs, [](const SampleRecord &r) { return r.I2; });
                double m = mean(xs);
                summary.add_row({int64_t(n), theta, p_m, int64_t(recs.size()), m, standard_error(xs), fluctuation(xs)});
                curve.p.push_back(p_m);
                curve.y.push_back(m);
                groups.push_back(std::move(recs));
            }
            curves.push_back(std::move(curve));
        }
        for (size_t k = 0; k + 1 < curves.size(); k++) {
            auto p = find_crossing(curves[k], curves[k + 1]);
            crossings.add_row({theta, int64_t(curves[k].size), int64_t(curves[k + 1].size), p ? *p : kNaN});
        }
        if (curves.size() >= 2) {
            try {
                CollapseResult c = fss_collapse(curves);
                collapse.add_row({theta, c.p_c, c.nu, c.objective, c.p_c_step, c.nu_step,
                                  std::string(c.low_confidence ? "low_confidence" : "ok")});
            } catch (const Error &e) {
                collapse.add_row({theta, kNaN, kNaN, kNaN, kNaN, kNaN, std::string(error_kind_name(e.kind()))});
            }
        }
    }
    ExperimentResult res;
    res.name = "mipt";
    PlotSpec spec;
    spec.title = "mean I2 vs measurement probability";
    spec.x_label = "p_m";
    spec.y_label = "mean I2 (bits)";
    for (size_t r = 0; r < summary.size(); r++) {
        char label[64];
        std::snprintf(label, sizeof label, "n=%d theta=%.4g", int(summary.number(r, "n")), summary.number(r, "theta"));
        if (spec.series.empty() || spec.series.back().label != label) {
            spec.series.push_back({label, {}, {}});
        }
        spec.series.back().x.push_back(summary.number(r, "p_m"));
        spec.series.back().y.push_back(summary.number(r, "mean_I2"));
    }
    res.plots.push_back({"I2", std::move(spec)});
    res.tables.push_back({"summary", std::move(summary)});
    res.tables.push_back({"crossings", std::move(crossings)});
    res.tables.push_back({"collapse", std::move(collapse)});
    res.tables.push_back({"records", records_table(groups, true)});
    return res;
}

OracleCheck mean_purity_check(size_t n, size_t samples, uint64_t master_seed, size_t threads, double fraction) {
    auto [a, b] = tdoped_subsystems(n, fraction);
    QubitSubset ab = a.united(b);
    std::vector<double> purity(samples);
    parallel_for(samples, threads, [&](size_t i) {
        Rng gen(instance_seed(master_seed, ExperimentKind::Oracle, n, 0, i));
        Circuit c = gen_tdoped(n, 0, gen, {CnotPairing::Independent, CliffordBlockKind::UniformGlobal});
        StabilizerTableau t(n);
        for (const auto &op : c.ops) {
            t.apply(op);
        }
        purity[i] = std::ldexp(1.0, -t.entropy(ab));
    });
    OracleCheck chk;
    chk.name = "mean_purity";
    chk.n = int(n);
    chk.n_t = 0;
    chk.value = mean(purity);
    chk.expected = mean_purity_exact(int(n), int(ab.size()));
    chk.tolerance = 3 * standard_error(purity);
    chk.margin = chk.tolerance - std::abs(chk.value - chk.expected);
    chk.pass = chk.margin >= 0;
    return chk;
}

OracleCheck fourth_moment_check(size_t n, int n_t, size_t samples, uint64_t master_seed, size_t threads,
                                double fraction) {
    auto [a, b] = tdoped_subsystems(n, fraction);
    QubitSubset ab = a.united(b);
    std::vector<double> squared(samples);
    parallel_for(samples, threads, [&](size_t i) {
        Rng gen(instance_seed(master_seed, ExperimentKind::Oracle, n, size_t(1 + n_t), i));
        Circuit c = gen_tdoped(n, n_t, gen, {CnotPairing::Independent, CliffordBlockKind::UniformGlobal});
        double p;
        if (n_t == 0) {
            StabilizerTableau t(n);
            for (const auto &op : c.ops) {
                t.apply(op);
            }
            p = std::ldexp(1.0, -t.entropy(ab));
        } else {
            PureState s(n);
            for (const auto &op : c.ops) {
                s.apply(op);
            }
            p = s.purity(ab);
        }
        squared[i] = p * p;
    });
    OracleCheck chk;
    chk.name = "fourth_moment_decay";
    chk.n = int(n);
    chk.n_t = n_t;
    chk.value = decay_statistic(int(n), mean(squared));
    chk.expected = tilde_delta_prediction(n_t);
    double se = std::ldexp(standard_error(squared), int(n));
    chk.tolerance = std::max(3 * se, 0.2 * chk.expected);
    chk.margin = chk.tolerance - std::abs(chk.value - chk.expected);
    chk.pass = chk.margin >= 0;
    return chk;
}

std::vector<OracleCheck> lemma1_checks(int n) {
    Eigen::MatrixXcd m = lemma1_matrix(n);
    std::vector<OracleCheck> out;
    const double diag = 12.0 * std::ldexp(1.0, 4 * (n - 1));
    const double bound = 4.0 * std::ldexp(1.0, 3 * (n - 1));
    for (int i = 0; i < 6; i++) {
        OracleCheck chk;
        chk.name = "lemma1_diagonal_" + kHatS3Labels[size_t(i)];
        chk.n = n;
        chk.value = m(i, i).real();
        chk.expected = diag;
        chk.tolerance = 1e-9;
        chk.margin = chk.tolerance - std::abs(m(i, i) - diag);
        chk.pass = chk.margin > 0;
        out.push_back(chk);
    }
    double worst = 0;
    for (int i = 0; i < 6; i++) {
        for (int j = 0; j < 6; j++) {
            if (i != j) {
                worst = std::max(worst, std::abs(m(i, j)));
            }
        }
    }
    OracleCheck off;
    off.name = "lemma1_offdiagonal_max";
    off.n = n;
    off.value = worst;
    off.expected = bound;
    off.tolerance = 1e-9;
    off.margin = bound + off.tolerance - worst;
    off.pass = off.margin >= 0;
    out.push_back(off);
    return out;
}

std::vector<OracleCheck> permutation_trace_checks(int n) {
    std::vector<OracleCheck> out;
    auto exact = [&](std::string name, int size, double value, double expected) {
        OracleCheck chk;
        chk.name = std::move(name);
        chk.n = size;
        chk.value = value;
        chk.expected = expected;
        chk.tolerance = 0;
        chk.margin = -std::abs(value - expected);
        chk.pass = value == expected;
        out.push_back(chk);
    };
    exact("trace_r_(12)_t2", 1, trace(site_permutation(Permutation::parse("(12)", 2))).real(), 2);
    exact("trace_r_e_t2", 1, trace(site_permutation(Permutation::identity(2))).real(), 4);
    for (const auto &pi : Permutation::all(4)) {
        double site = trace(site_permutation(pi)).real();
        double full = trace(build_permutation_operator(pi.str(), 4, n).matrix).real();
        exact("trace_R_" + pi.str() + "_t4", n, full, std::pow(site, n));
    }
    return out;
}

Table oracle_table(const std::vector<OracleCheck> &checks) {
    Table t({"check", "n", "n_t", "value", "expected", "tolerance", "margin", "pass"});
    for (const auto &c : checks) {
        t.add_row({c.name, int64_t(c.n), int64_t(c.n_t), c.value, c.expected, c.tolerance, c.margin, int64_t(c.pass)});
    }
    return t;
}

ExperimentResult run_oracle_checks(const EnsembleConfig &config) {
    validate(config);
    std::vector<OracleCheck> checks;
    for (size_t n : config.qubits) {
        checks.push_back(mean_purity_check(n, config.samples, config.master_seed, config.threads, config.subsystem_fraction));
        for (int n_t : config.nt_values()) {
            checks.push_back(
                fourth_moment_check(n, n_t, config.samples, config.master_seed, config.threads, config.subsystem_fraction));
        }
    }
    for (int n : {1, 2}) {
        auto l = lemma1_checks(n);
        checks.insert(checks.end(), l.begin(), l.end());
    }
    auto p = permutation_trace_checks(2);
    checks.insert(checks.end(), p.begin(), p.end());
    ExperimentResult res;
    res.name = "oracle";
    res.tables.push_back({"report", oracle_table(checks)});
    return res;
}

ExperimentResult run_experiment(const EnsembleConfig &config) {
    switch (config.kind) {
        case ExperimentKind::Tdoped:
            return run_tdoped(config);
        case ExperimentKind::Mipt:
            return run_mipt(config);
        case ExperimentKind::Kurtosis:
            return run_kurtosis(config);
        case ExperimentKind::Renyi4:
            return run_renyi4(config);
        case ExperimentKind::Oracle:
            return run_oracle_checks(config);
    }
    throw Error(ErrorKind::InvalidConfig, "unknown experiment");
}

std::vector<std::string> emit_outputs(const ExperimentResult &result, const std::string &out_dir, OutputFormat format) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw Error(ErrorKind::Io, "cannot create output directory '" + out_dir + "': " + ec.message());
    }
    std::vector<std::string> paths;
    const char *ext = format == OutputFormat::Csv ? ".csv" : ".json";
    for (const auto &[suffix, table] : result.tables) {
        std::string path = (std::filesystem::path(out_dir) / (result.name + "_" + suffix + ext)).string();
        write_table(table, path, format);
        paths.push_back(path);
    }
    for (const auto &[suffix, plot] : result.plots) {
        std::string path = (std::filesystem::path(out_dir) / (result.name + "_" + suffix + ".svg")).string();
        write_text(path, render_svg(plot));
        paths.push_back(path);
    }
    return paths;
}

}  // namespace qfluct
