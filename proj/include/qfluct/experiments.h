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

#ifndef QFLUCT_EXPERIMENTS_H
#define QFLUCT_EXPERIMENTS_H

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qfluct/analysis.h"
#include "qfluct/config.h"
#include "qfluct/observables.h"
#include "qfluct/table.h"

namespace qfluct {

/// Runs fn(0..count-1) on `threads` workers (0 = hardware concurrency).
/// Work is claimed by index, so any output written by index is independent of
/// the thread count. The first exception thrown by any call is rethrown.
void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn);

/// Named tables and plots produced by one experiment.
struct ExperimentResult {
    std::string name;
    std::vector<std::pair<std::string, Table>> tables;
    std::vector<std::pair<std::string, PlotSpec>> plots;

    const Table &table(const std::string &suffix) const;
};

/// Subsystems of the t-doped family: A = first f*n qubits, B = last f*n.
std::pair<QubitSubset, QubitSubset> tdoped_subsystems(size_t n, double fraction);
/// Subsystems of the MIPT sweep: A starts at 0, B at n/2, each f*n long.
std::pair<QubitSubset, QubitSubset> mipt_subsystems(size_t n, double fraction);

/// Per-instance seed of the circuit-generation stream; the measurement stream
/// of the same instance uses stream = 1.
uint64_t instance_seed(uint64_t master, ExperimentKind kind, size_t n, size_t param_index, size_t instance,
                       uint64_t stream = 0);

/// Raw records of one (n, n_t) point of a t-doped-family experiment.
std::vector<SampleRecord> collect_tdoped(const EnsembleConfig &config, size_t n, int n_t, size_t param_index);

/// Final-state record of one (n, theta, p_m) MIPT point.
std::vector<SampleRecord> collect_mipt(const EnsembleConfig &config, size_t n, double theta, double p_m,
                                       size_t param_index);

/// Tables: "summary" (per n, n_t: means, fluctuations and -ln of each),
/// "fits" (linear fit of each -ln delta column vs n_t per n), "records".
ExperimentResult run_tdoped(const EnsembleConfig &config);
/// Tables: "summary" (kurtosis of <S_z> on A, B, AB and their combination),
/// "fits". Degenerate points are flagged rather than raised.
ExperimentResult run_kurtosis(const EnsembleConfig &config);
/// Tables: "summary" (delta and mean of S4_AB), "fits".
ExperimentResult run_renyi4(const EnsembleConfig &config);
/// Tables: "summary" (mean I2, standard error, F_AB per grid point),
/// "crossings", "collapse", "records".
ExperimentResult run_mipt(const EnsembleConfig &config);

/// One line of the oracle report. A check passes when margin >= 0; for
/// two-sided checks margin = tolerance - |value - expected|.
struct OracleCheck {
    std::string name;
    int n = 0;
    int n_t = -1;
    double value = 0;
    double expected = 0;
    double tolerance = 0;
    double margin = 0;
    bool pass = false;
};

/// Sample mean of Tr rho_AB^2 over uniformly random Clifford states vs the
/// closed form; tolerance 3 standard errors.
OracleCheck mean_purity_check(size_t n, size_t samples, uint64_t master_seed, size_t threads,
                              double fraction = 0.25);
/// D = 2^N E[(Tr rho_AB^2)^2] - 4 vs (3/4)^n_t with tolerance
/// max(3 SE, 20% relative), over the global-block t-doped ensemble.
OracleCheck fourth_moment_check(size_t n, int n_t, size_t samples, uint64_t master_seed, size_t threads,
                                double fraction = 0.25);
/// Diagonal and off-diagonal checks of lemma1_matrix at n in {1, 2}.
std::vector<OracleCheck> lemma1_checks(int n);
/// tr(r_(12)) = 2, tr(r_e) = 4 at t = 2 and tr(R_pi) = tr(r_pi)^n over S_4.
std::vector<OracleCheck> permutation_trace_checks(int n);

/// Table "report" with one row per check.
ExperimentResult run_oracle_checks(const EnsembleConfig &config);
Table oracle_table(const std::vector<OracleCheck> &checks);

ExperimentResult run_experiment(const EnsembleConfig &config);

/// Writes every table as <out>/<name>_<suffix>.<csv|json> and every plot as
/// <out>/<name>_<suffix>.svg, creating the directory. Returns the paths.
std::vector<std::string> emit_outputs(const ExperimentResult &result, const std::string &out_dir, OutputFormat format);

}  // namespace qfluct

#endif
