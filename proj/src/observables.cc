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

#include "qfluct/observables.h"

#include <cmath>

namespace qfluct {

void measure_record(const PureState &s, const QubitSubset &a, const QubitSubset &b, SampleRecord &rec) {
    if (!a.disjoint(b)) {
        throw Error(ErrorKind::InvalidSubset, "record subsets overlap");
    }
    QubitSubset ab = a.united(b);
    rec.n = s.num_qubits();
    rec.S2_A = s.renyi_entropy(a, 2);
    rec.S2_B = s.renyi_entropy(b, 2);
    rec.S2_AB = s.renyi_entropy(ab, 2);
    rec.S4_AB = s.renyi_entropy(ab, 4);
    rec.I2 = rec.S2_A + rec.S2_B - rec.S2_AB;
    rec.Sz_A = s.spin_z(a);
    rec.Sz_B = s.spin_z(b);
    rec.Sz_AB = s.spin_z(ab);
}

void measure_record(const StabilizerTableau &t, const QubitSubset &a, const QubitSubset &b, SampleRecord &rec) {
    if (!a.disjoint(b)) {
        throw Error(ErrorKind::InvalidSubset, "record subsets overlap");
    }
    QubitSubset ab = a.united(b);
    rec.n = t.num_qubits();
    rec.S2_A = t.entropy(a);
    rec.S2_B = t.entropy(b);
    rec.S2_AB = t.entropy(ab);
    rec.S4_AB = rec.S2_AB;
    rec.I2 = rec.S2_A + rec.S2_B - rec.S2_AB;
    auto spin = [&](const QubitSubset &x) {
        double total = 0;
        for (uint32_t q : x.indices()) {
            total += t.expectation_z(q);
        }
        return total;
    };
    rec.Sz_A = spin(a);
    rec.Sz_B = spin(b);
    rec.Sz_AB = spin(ab);
}

double mean(std::span<const double> xs) {
    if (xs.empty()) {
        throw Error(ErrorKind::InsufficientData, "mean of an empty sample");
    }
    double total = 0;
    for (double x : xs) {
        total += x;
    }
    return total / double(xs.size());
}

double fluctuation(std::span<const double> xs) {
    if (xs.size() < 2) {
        throw Error(ErrorKind::InsufficientData, "fluctuation needs at least 2 samples");
    }
    double mu = mean(xs);
    double acc = 0;
    for (double x : xs) {
        acc += (x - mu) * (x - mu);
    }
    return std::sqrt(acc / double(xs.size()));
}

double standard_error(std::span<const double> xs) {
    return fluctuation(xs) / std::sqrt(double(xs.size()));
}

double kurtosis(std::span<const double> xs) {
    if (xs.size() < 4) {
        throw Error(ErrorKind::InsufficientData, "kurtosis needs at least 4 samples");
    }
    double mu = mean(xs);
    double m2 = 0, m4 = 0;
    for (double x : xs) {
        double d = (x - mu) * (x - mu);
        m2 += d;
        m4 += d * d;
    }
    m2 /= double(xs.size());
    m4 /= double(xs.size());
    if (std::sqrt(m2) <= 1e-12) {
        throw Error(ErrorKind::DegenerateSample, "kurtosis of a constant sample");
    }
    return m4 / (m2 * m2);
}

}  // namespace qfluct
