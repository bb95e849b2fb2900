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

#ifndef QFLUCT_CONFIG_H
#define QFLUCT_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfluct/circuits.h"
#include "qfluct/table.h"

namespace qfluct {

enum class ExperimentKind { Tdoped, Mipt, Kurtosis, Renyi4, Oracle };
enum class BackendChoice { Auto, Tableau, Statevector };

std::string_view experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment(std::string_view name);
BackendChoice parse_backend(std::string_view name);
std::string_view backend_name(BackendChoice b);

/// Parameters of one experiment. `default_config` fills per-kind defaults;
/// a JSON document or CLI flags then override individual fields.
struct EnsembleConfig {
    ExperimentKind kind = ExperimentKind::Tdoped;
    std::vector<size_t> qubits;
    int nt_min = 0;
    int nt_max = 16;
    int nt_step = 1;
    std::vector<double> thetas;
    std::vector<double> pm_grid;
    int cycles = 125;
    /// Circuits per (n, n_t) point for the t-doped family and the oracle.
    size_t samples = 500;
    /// Trajectories per (n, theta, p_m) point for the MIPT sweep.
    size_t instances = 400;
    double subsystem_fraction = 0.25;
    uint64_t master_seed = 1;
    BackendChoice backend = BackendChoice::Auto;
    CnotPairing pairing = CnotPairing::Independent;
    CliffordBlockKind block = CliffordBlockKind::LocalComposite;
    size_t threads = 1;
    size_t statevector_cap = 26;
    std::string out = "out";
    OutputFormat format = OutputFormat::Csv;

    std::vector<int> nt_values() const;
};

EnsembleConfig default_config(ExperimentKind kind);

/// Checks ranges and cross-field consistency. InvalidConfig for inconsistent
/// settings, Resource when a statevector run would exceed the cap.
void validate(const EnsembleConfig &config);

/// Overrides fields of `base` from a JSON object. Unknown keys are rejected.
EnsembleConfig apply_json(EnsembleConfig base, std::string_view json_text);

/// "pi/4", "3*pi/8", "-pi", "0.25" and similar.
double parse_angle(std::string_view text);

/// "start:stop:step" inclusive of stop (to within half a step), or a
/// comma-separated list.
std::vector<double> parse_grid(std::string_view text);

/// Comma-separated non-negative integers.
std::vector<size_t> parse_size_list(std::string_view text);

}  // namespace qfluct

#endif
