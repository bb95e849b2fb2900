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

#include "qfluct/clifford_sampling.h"

#include <algorithm>
#include <cmath>

#include "qfluct/error.h"

namespace qfluct {

namespace {

struct MallowsSample {
    std::vector<uint8_t> hadamard;
    std::vector<size_t> perm;
};

MallowsSample sample_quantum_mallows(size_t n, Rng &rng) {
    MallowsSample out{std::vector<uint8_t>(n), std::vector<size_t>(n)};
    std::vector<size_t> remaining(n);
    for (size_t i = 0; i < n; i++) {
        remaining[i] = i;
    }
    for (size_t i = 0; i < n; i++) {
        long m = long(n - i);
        double eps = std::pow(4.0, -double(m));
        double r = rng.uniform();
        long index = -long(std::ceil(std::log2(r + (1 - r) * eps)));
        index = std::clamp(index, 0L, 2 * m - 1);
        out.hadamard[i] = index < m;
        long k = index < m ? index : 2 * m - index - 1;
        out.perm[i] = remaining[size_t(k)];
        remaining.erase(remaining.begin() + k);
    }
    return out;
}

// Random strictly-lower part; mirrored when `symmetric`.
void fill_lower(BitMatrix &m, Rng &rng, bool symmetric) {
    for (size_t r = 1; r < m.rows(); r++) {
        for (size_t c = 0; c < r; c++) {
            bool b = rng.bit();
            m.set(r, c, b);
            if (symmetric) {
                m.set(c, r, b);
            }
        }
    }
}

// [[delta, 0], [gamma*delta, delta^-T]]
BitMatrix hadamard_free_block(const BitMatrix &gamma, const BitMatrix &delta) {
    size_t n = delta.rows();
    BitMatrix inv;
    delta.invert(inv);
    BitMatrix inv_t = inv.transposed();
    BitMatrix prod = gamma * delta;
    BitMatrix out(2 * n, 2 * n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            out.set(r, c, delta.get(r, c));
            out.set(n + r, c, prod.get(r, c));
            out.set(n + r, n + c, inv_t.get(r, c));
        }
    }
    return out;
}

class Synthesizer {
   public:
    explicit Synthesizer(StabilizerTableau t) : t_(std::move(t)), n_(t_.num_qubits()) {
    }

    std::vector<ElementaryGate> run() {
        for (uint32_t q = 0; q < n_; q++) {
            make_destab_x_true(q);
            clear_destab_row(q);
            clear_stab_row(q);
        }
        for (uint32_t q = 0; q < n_; q++) {
            if (t_.sign(q)) {
                emit({GateKind::Z, q});
            }
            if (t_.sign(n_ + q)) {
                emit({GateKind::X, q});
            }
        }
        // Recorded gates reduce U to identity; U is their inverse in reverse order.
        std::vector<ElementaryGate> circuit;
        for (auto it = reduced_.rbegin(); it != reduced_.rend(); ++it) {
            circuit.push_back(*it);
            if (it->kind == GateKind::S) {
                circuit.push_back({GateKind::Z, it->q0});
            }
        }
        return circuit;
    }

   private:
    void emit(ElementaryGate g) {
        switch (g.kind) {
            case GateKind::H:
                t_.h(g.q0);
                break;
            case GateKind::S:
                t_.s(g.q0);
                break;
            case GateKind::X:
                t_.x_gate(g.q0);
                break;
            case GateKind::Z:
                t_.z_gate(g.q0);
                break;
            case GateKind::CNOT:
                t_.cnot(g.q0, g.q1);
                break;
            default:
                throw std::logic_error("unexpected synthesis gate");
        }
        reduced_.push_back(g);
    }

    void swap(uint32_t a, uint32_t b) {
        emit({GateKind::CNOT, a, b});
        emit({GateKind::CNOT, b, a});
        emit({GateKind::CNOT, a, b});
    }

    void make_destab_x_true(uint32_t q) {
        if (t_.x(q, q)) {
            return;
        }
        for (uint32_t i = q + 1; i < n_; i++) {
            if (t_.x(q, i)) {
                swap(i, q);
                return;
            }
        }
        for (uint32_t i = q; i < n_; i++) {
            if (t_.z(q, i)) {
                emit({GateKind::H, i});
                if (i != q) {
                    swap(i, q);
                }
                return;
            }
        }
        throw std::logic_error("destabilizer row has no support on remaining qubits");
    }

    void clear_destab_row(uint32_t q) {
        for (uint32_t i = q + 1; i < n_; i++) {
            if (t_.x(q, i)) {
                emit({GateKind::CNOT, q, i});
            }
        }
        bool any_z = false;
        for (uint32_t i = q; i < n_; i++) {
            any_z |= t_.z(q, i);
        }
        if (any_z) {
            if (!t_.z(q, q)) {
                emit({GateKind::S, q});
            }
            for (uint32_t i = q + 1; i < n_; i++) {
                if (t_.z(q, i)) {
                    emit({GateKind::CNOT, i, q});
                }
            }
            emit({GateKind::S, q});
        }
    }

    void clear_stab_row(uint32_t q) {
        size_t row = n_ + q;
        for (uint32_t i = q + 1; i < n_; i++) {
            if (t_.z(row, i)) {
                emit({GateKind::CNOT, i, q});
            }
        }
        bool any_x = false;
        for (uint32_t i = q; i < n_; i++) {
            any_x |= t_.x(row, i);
        }
        if (any_x) {
            emit({GateKind::H, q});
            for (uint32_t i = q + 1; i < n_; i++) {
                if (t_.x(row, i)) {
                    emit({GateKind::CNOT, q, i});
                }
            }
            if (t_.z(row, q)) {
                emit({GateKind::S, q});
            }
            emit({GateKind::H, q});
        }
    }

    StabilizerTableau t_;
    uint32_t n_;
    std::vector<ElementaryGate> reduced_;
};

}  // namespace

StabilizerTableau random_clifford_tableau(size_t n, Rng &rng) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidSize, "Clifford needs at least one qubit");
    }
    MallowsSample mallows = sample_quantum_mallows(n, rng);

    BitMatrix gamma1(n, n), gamma2(n, n);
    BitMatrix delta1 = BitMatrix::identity(n), delta2 = BitMatrix::identity(n);
    for (size_t i = 0; i < n; i++) {
        gamma1.set(i, i, rng.bit());
    }
    for (size_t i = 0; i < n; i++) {
        gamma2.set(i, i, rng.bit());
    }
    fill_lower(gamma1, rng, true);
    fill_lower(gamma2, rng, true);
    fill_lower(delta1, rng, false);
    fill_lower(delta2, rng, false);

    BitMatrix table1 = hadamard_free_block(gamma1, delta1);
    BitMatrix table2 = hadamard_free_block(gamma2, delta2);

    BitMatrix middle(2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        size_t src_lo = mallows.perm[i];
        size_t src_hi = n + mallows.perm[i];
        size_t dst_lo = mallows.hadamard[i] ? n + i : i;
        size_t dst_hi = mallows.hadamard[i] ? i : n + i;
        for (size_t c = 0; c < 2 * n; c++) {
            middle.set(dst_lo, c, table2.get(src_lo, c));
            middle.set(dst_hi, c, table2.get(src_hi, c));
        }
    }
    BitMatrix sym = table1 * middle;
    std::vector<uint8_t> signs(2 * n);
    for (auto &s : signs) {
        s = rng.bit();
    }
    return StabilizerTableau::from_symplectic(sym, signs);
}

std::vector<ElementaryGate> synthesize_clifford(const StabilizerTableau &t) {
    return Synthesizer(t).run();
}

std::vector<ElementaryGate> random_clifford_gates(size_t n, Rng &rng) {
    return synthesize_clifford(random_clifford_tableau(n, rng));
}

}  // namespace qfluct
