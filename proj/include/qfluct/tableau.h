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

#ifndef QFLUCT_TABLEAU_H
#define QFLUCT_TABLEAU_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qfluct/circuit.h"
#include "qfluct/gf2.h"
#include "qfluct/rng.h"
#include "qfluct/subset.h"

namespace qfluct {

/// Stabilizer state of n qubits in destabilizer/stabilizer form.
///
/// Rows 0..n-1 are destabilizers, rows n..2n-1 stabilizers. Each row holds
/// packed X and Z bits plus a sign bit; a row denotes (-1)^sign * prod P(x_q, z_q)
/// with P(1,1) = Y. Applying a Clifford U conjugates every row, so the rows of
/// a tableau prepared from |0...0> by U are the images U X_q U^dag and U Z_q U^dag.
class StabilizerTableau {
   public:
    explicit StabilizerTableau(size_t n);

    /// Builds a tableau from a 2n x 2n symplectic matrix (rows: destabilizers then
    /// stabilizers; columns: X bits then Z bits) and 2n sign bits.
    static StabilizerTableau from_symplectic(const BitMatrix &rows, std::span<const uint8_t> signs);

    size_t num_qubits() const {
        return n_;
    }

    bool x(size_t row, size_t q) const {
        return (xs_[row * stride_ + q / 64] >> (q % 64)) & 1;
    }
    bool z(size_t row, size_t q) const {
        return (zs_[row * stride_ + q / 64] >> (q % 64)) & 1;
    }
    bool sign(size_t row) const {
        return signs_[row];
    }

    /// e.g. "+XZ" (qubit 0 first).
    std::string stabilizer_str(size_t i) const;
    std::string destabilizer_str(size_t i) const;

    /// Conjugates the tableau by a Clifford gate. Rotations with angle exactly 0
    /// act as identity; T, other rotations and measurements are rejected.
    void apply(const GateOp &op);

    void h(uint32_t q);
    void s(uint32_t q);
    void x_gate(uint32_t q);
    void y_gate(uint32_t q);
    void z_gate(uint32_t q);
    void cnot(uint32_t control, uint32_t target);
    void clifford2(uint32_t a, uint32_t b, const TwoQubitClifford &c);

    /// True when Z_q commutes with every stabilizer.
    bool is_deterministic_z(uint32_t q) const;

    /// Projective Z measurement. The outcome is 0 iff `u` < P(0), where P(0)
    /// is 1, 1/2 or 0. Returns the outcome bit.
    int measure_z(uint32_t q, double u);

    /// Draws exactly one uniform from `rng`, whether or not the outcome is random.
    int measure_z(uint32_t q, Rng &rng) {
        return measure_z(q, rng.uniform());
    }

    /// <Z_q> of the state: +1 or -1 when deterministic, 0 otherwise. Does not collapse.
    int expectation_z(uint32_t q) const;

    /// Entanglement entropy of subset A in bits (all Renyi orders coincide).
    int entropy(const QubitSubset &a) const;

    /// Throws std::logic_error when commutation, rank, or pairing fails.
    void check_invariants() const;

    bool operator==(const StabilizerTableau &other) const = default;

   private:
    uint64_t *xrow(size_t r) {
        return xs_.data() + r * stride_;
    }
    uint64_t *zrow(size_t r) {
        return zs_.data() + r * stride_;
    }
    const uint64_t *xrow(size_t r) const {
        return xs_.data() + r * stride_;
    }
    const uint64_t *zrow(size_t r) const {
        return zs_.data() + r * stride_;
    }

    void check_qubit(uint32_t q) const;
    std::string row_str(size_t r) const;
    bool anticommute(size_t a, size_t b) const;
    /// row(target) := row(source) * row(target), tracking the sign.
    void rowmul(size_t target, size_t source);
    void copy_row(size_t dst, size_t src);
    void clear_row(size_t r);

    size_t n_;
    size_t stride_;
    // 2n rows plus one scratch row.
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;
};

}  // namespace qfluct

#endif
