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

// Command-line front end: one subcommand per experiment plus `plot`.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qfluct/config.h"
#include "qfluct/error.h"
#include "qfluct/experiments.h"
#include "qfluct/table.h"

namespace {

using namespace qfluct;

constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

// Raw flag values; unset flags leave the config file / defaults alone.
struct Flags {
    std::string config_path;
    std::optional<std::string> qubits;
    std::optional<int> nt_min;
    std::optional<int> nt_max;
    std::optional<int> nt_step;
    std::optional<size_t> samples;
    std::optional<size_t> instances;
    std::optional<std::string> theta;
    std::optional<std::string> pm_grid;
    std::optional<int> cycles;
    std::optional<std::string> fraction;
    std::optional<std::string> backend;
    std::optional<uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<size_t> threads;
    std::optional<std::string> pairing;
    std::optional<std::string> block;
};

void add_experiment_flags(CLI::App *cmd, Flags &f) {
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its values");
    cmd->add_option("--qubits", f.qubits, "comma-separated system sizes");
    cmd->add_option("--nt-min", f.nt_min, "smallest T count");
    cmd->add_option("--nt-max", f.nt_max, "largest T count");
    cmd->add_option("--nt-step", f.nt_step, "T count step");
    cmd->add_option("--samples", f.samples, "circuits per (n, n_t) point");
    cmd->add_option("--instances", f.instances, "trajectories per MIPT grid point");
    cmd->add_option("--theta", f.theta, "comma-separated rotation angles, e.g. 0,pi/20,pi/4");
    cmd->add_option("--pm-grid", f.pm_grid, "start:stop:step or comma-separated list");
    cmd->add_option("--cycles", f.cycles, "MIPT cycles per trajectory");
    cmd->add_option("--subsystem-fraction", f.fraction, "|A|/n = |B|/n, e.g. 1/4 or 0.125");
    cmd->add_option("--backend", f.backend, "auto | tableau | statevector");
    cmd->add_option("--seed", f.seed, "master seed");
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_option("--format", f.format, "csv | json");
    cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    cmd->add_option("--cnot-pairing", f.pairing, "independent | fixed");
    cmd->add_option("--clifford-block", f.block, "local | global");
}

double parse_fraction(const std::string &s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return std::stod(s);
        }
        return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    } catch (const std::exception &) {
        throw Error(ErrorKind::InvalidConfig, "bad subsystem fraction '" + s + "'");
    }
}

EnsembleConfig build_config(ExperimentKind kind, const Flags &f) {
    EnsembleConfig c = default_config(kind);
    if (!f.config_path.empty()) {
        c = apply_json(c, read_text(f.config_path));
        if (c.kind != kind) {
            throw Error(ErrorKind::InvalidConfig, "config file describes experiment '" +
                                                      std::string(experiment_name(c.kind)) + "', not '" +
                                                      std::string(experiment_name(kind)) + "'");
        }
    }
    if (f.qubits) c.qubits = parse_size_list(*f.qubits);
    if (f.nt_min) c.nt_min = *f.nt_min;
    if (f.nt_max) c.nt_max = *f.nt_max;
    if (f.nt_step) c.nt_step = *f.nt_step;
    if (f.samples) c.samples = *f.samples;
    if (f.instances) c.instances = *f.instances;
    if (f.theta) c.thetas = parse_grid(*f.theta);
    if (f.pm_grid) c.pm_grid = parse_grid(*f.pm_grid);
    if (f.cycles) c.cycles = *f.cycles;
    if (f.fraction) c.subsystem_fraction = parse_fraction(*f.fraction);
    if (f.backend) c.backend = parse_backend(*f.backend);
    if (f.seed) c.master_seed = *f.seed;
    if (f.out) c.out = *f.out;
    if (f.format) c.format = parse_format(*f.format);
    if (f.threads) c.threads = *f.threads;
    if (f.pairing) {
        if (*f.pairing != "independent" && *f.pairing != "fixed") {
            throw Error(ErrorKind::InvalidConfig, "cnot pairing must be independent or fixed");
        }
        c.pairing = *f.pairing == "fixed" ? CnotPairing::FixedPair : CnotPairing::Independent;
    }
    if (f.block) {
        if (*f.block != "local" && *f.block != "global") {
            throw Error(ErrorKind::InvalidConfig, "clifford block must be local or global");
        }
        c.block = *f.block == "global" ? CliffordBlockKind::UniformGlobal : CliffordBlockKind::LocalComposite;
    }
    return c;
}

int run(int argc, char **argv) {
    CLI::App app{"Fluctuation and magic experiments on random Clifford+T circuits"};
    app.require_subcommand(1);
    Flags flags;
    struct Sub {
        const char *name;
        ExperimentKind kind;
        const char *help;
    };
    const Sub subs[] = {
        {"tdoped", ExperimentKind::Tdoped, "mutual-information fluctuations vs T count"},
        {"mipt", ExperimentKind::Mipt, "measurement-induced transition sweep"},
        {"kurtosis", ExperimentKind::Kurtosis, "kurtosis of subsystem spin vs T count"},
        {"renyi4", ExperimentKind::Renyi4, "Renyi-4 entropy control vs T count"},
        {"oracle", ExperimentKind::Oracle, "closed-form and brute-force theory checks"},
    };
    std::vector<std::pair<CLI::App *, ExperimentKind>> commands;
    for (const auto &s : subs) {
        CLI::App *cmd = app.add_subcommand(s.name, s.help);
        add_experiment_flags(cmd, flags);
        commands.emplace_back(cmd, s.kind);
    }
    std::string plot_in, plot_x = "n_t", plot_y, plot_group = "n", plot_out;
    CLI::App *plot = app.add_subcommand("plot", "SVG line plot of one column against another from a CSV table");
    plot->add_option("--in", plot_in, "input CSV")->required();
    plot->add_option("--x", plot_x, "x column");
    plot->add_option("--y", plot_y, "y column")->required();
    plot->add_option("--series", plot_group, "column that separates series");
    plot->add_option("--out", plot_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (plot->parsed()) {
        Table t = parse_csv(read_text(plot_in));
        write_text(plot_out, render_svg(plot_from_table(t, plot_x, plot_y, plot_group)));
        std::printf("%s\n", plot_out.c_str());
        return 0;
    }
    for (const auto &[cmd, kind] : commands) {
        if (!cmd->parsed()) {
            continue;
        }
        EnsembleConfig config = build_config(kind, flags);
        validate(config);
        ExperimentResult result = run_experiment(config);
        for (const auto &path : emit_outputs(result, config.out, config.format)) {
            std::printf("%s\n", path.c_str());
        }
        if (kind == ExperimentKind::Oracle) {
            const Table &report = result.table("report");
            int failed = 0;
            for (size_t r = 0; r < report.size(); r++) {
                failed += report.number(r, "pass") == 0;
            }
            std::printf("oracle checks: %zu run, %d failed\n", report.size(), failed);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const Error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.kind()) {
            case ErrorKind::InvalidConfig:
            case ErrorKind::InvalidSize:
            case ErrorKind::InvalidSubset:
                return kExitConfig;
            case ErrorKind::Resource:
                return kExitResource;
            default:
                return 1;
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
