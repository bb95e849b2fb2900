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

#ifndef QFLUCT_STATEVECTOR_H
#define QFLUCT_STATEVECTOR_H

#include <Eigen/Dense>
#include <array>
#include <span>
#include <vector>

#include "qfluct/circuit.h"
#include "qfluct/rng.h"
#include "qfluct/subset.h"

namespace qfluct {

/// Reduced state of a subset; basis bit j is the j-th smallest qubit of the subset.
struct ReducedDensity {
    size_t k = 0;
    Eigen::MatrixXcd matrix;
};

/// Dense pure state over 2^n amplitudes. Qubit q is bit q of the basis index
/// (qubit 0 least significant).
class PureState {
   public:
    static constexpr size_t kDefaultMaxQubits = 26;

    explicit PureState(size_t n, size_t max_qubits = kDefaultMaxQubits);

    /// Takes ownership of an amplitude vector of length 2^n with unit norm
    /// (within `norm_tolerance`).
    static PureState from_amplitudes(std::vector<cdouble> amplitudes, double norm_tolerance = 1e-10);

    size_t num_qubits() const {
        return n_;
    }
    std::span<const cdouble> amplitudes() const {
        return amps_;
    }
    double norm() const;

    void apply(const GateOp &op);
    void apply_single(uint32_t q, const std::array<cdouble, 4> &m);
    void apply_two(uint32_t a, uint32_t b, const std::array<cdouble, 16> &m);
    void apply_cnot(uint32_t control, uint32_t target);

    /// Outcome 0 iff u < P(0); the surviving branch is renormalized.
    int measure_z(uint32_t q, double u);
    /// Consumes exactly one uniform from `rng`.
    int measure_z(uint32_t q, Rng &rng) {
        return measure_z(q, rng.uniform());
    }

    /// Tr(rho_A^2), computed on the smaller side of the cut.
    double purity(const QubitSubset &a) const;
    /// Renyi entropy in bits for order 2 or 4.
    double renyi_entropy(const QubitSubset &a, int order) const;
    /// Sum over q in A of <Z_q>, with <Z>(|0>) = +1.
    double spin_z(const QubitSubset &a) const;
    ReducedDensity reduced_density(const QubitSubset &a) const;

   private:
    PureState() = default;
    void check_qubit(uint32_t q) const;
    /// Amplitudes reshaped to rows indexed by `rows`, columns by the complement.
    Eigen::MatrixXcd reshape(const QubitSubset &rows) const;
    /// rho on the smaller side of the A | complement cut.
    Eigen::MatrixXcd small_side_density(const QubitSubset &a) const;

    size_t n_ = 0;
    std::vector<cdouble> amps_;
};

}  // namespace qfluct

#endif
