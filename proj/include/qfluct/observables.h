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

#ifndef QFLUCT_OBSERVABLES_H
#define QFLUCT_OBSERVABLES_H

#include <concepts>
#include <span>

#include "qfluct/error.h"
#include "qfluct/statevector.h"
#include "qfluct/subset.h"
#include "qfluct/tableau.h"

namespace qfluct {

/// Renyi-2 entropy in bits on either backend.
inline double entropy2(const StabilizerTableau &t, const QubitSubset &a) {
    return t.entropy(a);
}
inline double entropy2(const PureState &s, const QubitSubset &a) {
    return s.renyi_entropy(a, 2);
}

template <class State>
concept EntropyBackend = requires(const State &s, const QubitSubset &a) {
    { entropy2(s, a) } -> std::convertible_to<double>;
};

/// I2 = S_A + S_B - S_{A u B} for disjoint, non-empty A and B.
template <EntropyBackend State>
double mutual_info2(const State &state, const QubitSubset &a, const QubitSubset &b) {
    if (a.empty() || b.empty()) {
        throw Error(ErrorKind::InvalidSubset, "mutual information needs non-empty subsets");
    }
    if (!a.disjoint(b)) {
        throw Error(ErrorKind::InvalidSubset, "mutual information subsets overlap: " + a.str() + " and " + b.str());
    }
    return entropy2(state, a) + entropy2(state, b) - entropy2(state, a.united(b));
}

/// Observables of one circuit instance.
struct SampleRecord {
    size_t instance_index = 0;
    size_t n = 0;
    int n_t = -1;
    double theta = 0;
    double p_m = 0;
    double I2 = 0;
    double S2_A = 0;
    double S2_B = 0;
    double S2_AB = 0;
    double S4_AB = 0;
    double Sz_A = 0;
    double Sz_B = 0;
    double Sz_AB = 0;
};

/// Fills the entropy and spin fields of a record from a final state.
void measure_record(const PureState &s, const QubitSubset &a, const QubitSubset &b, SampleRecord &rec);
void measure_record(const StabilizerTableau &t, const QubitSubset &a, const QubitSubset &b, SampleRecord &rec);

double mean(std::span<const double> xs);
/// Standard error of the mean using the population standard deviation.
double standard_error(std::span<const double> xs);

/// Population standard deviation (E[X^2] - E[X]^2)^(1/2). Needs >= 2 samples.
double fluctuation(std::span<const double> xs);

/// Standardized fourth moment E[(X-mu)^4] / sigma^4 (not excess).
/// Needs >= 4 samples and sigma > 1e-12.
double kurtosis(std::span<const double> xs);

inline double kurt_combo(double k_a, double k_b, double k_ab) {
    return k_a + k_b - k_ab;
}

}  // namespace qfluct

#endif
