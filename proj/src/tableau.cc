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

#include "qfluct/tableau.h"

#include <stdexcept>

#include "qfluct/error.h"
#include "qfluct/pauli.h"

namespace qfluct {

StabilizerTableau::StabilizerTableau(size_t n)
    : n_(n),
      stride_(words_for_bits(n)),
      xs_((2 * n + 1) * stride_, 0),
      zs_((2 * n + 1) * stride_, 0),
      signs_(2 * n + 1, 0) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidSize, "tableau needs at least one qubit");
    }
    for (size_t q = 0; q < n; q++) {
        xrow(q)[q / 64] |= uint64_t{1} << (q % 64);
        zrow(n + q)[q / 64] |= uint64_t{1} << (q % 64);
    }
}

StabilizerTableau StabilizerTableau::from_symplectic(const BitMatrix &rows, std::span<const uint8_t> signs) {
    size_t n = rows.rows() / 2;
    if (n == 0 || rows.rows() != 2 * n || rows.cols() != 2 * n || signs.size() != 2 * n) {
        throw Error(ErrorKind::InvalidSize, "symplectic matrix must be 2n x 2n with 2n signs");
    }
    StabilizerTableau t(n);
    std::fill(t.xs_.begin(), t.xs_.end(), 0);
    std::fill(t.zs_.begin(), t.zs_.end(), 0);
    for (size_t r = 0; r < 2 * n; r++) {
        for (size_t q = 0; q < n; q++) {
            if (rows.get(r, q)) {
                t.xrow(r)[q / 64] |= uint64_t{1} << (q % 64);
            }
            if (rows.get(r, n + q)) {
                t.zrow(r)[q / 64] |= uint64_t{1} << (q % 64);
            }
        }
        t.signs_[r] = signs[r] & 1;
    }
    t.check_invariants();
    return t;
}

void StabilizerTableau::check_qubit(uint32_t q) const {
    if (q >= n_) {
        throw Error(ErrorKind::InvalidGate,
                    "qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

std::string StabilizerTableau::row_str(size_t r) const {
    std::string s(1, signs_[r] ? '-' : '+');
    for (size_t q = 0; q < n_; q++) {
        s += "IXZY"[x(r, q) | (z(r, q) << 1)];
    }
    return s;
}

std::string StabilizerTableau::stabilizer_str(size_t i) const {
    return row_str(n_ + i);
}

std::string StabilizerTableau::destabilizer_str(size_t i) const {
    return row_str(i);
}

void StabilizerTableau::h(uint32_t q) {
    check_qubit(q);
    size_t w = q / 64;
    unsigned b = q % 64;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &xw = xs_[r * stride_ + w];
        uint64_t &zw = zs_[r * stride_ + w];
        signs_[r] ^= ((xw & zw) >> b) & 1;
        uint64_t t = (xw ^ zw) & (uint64_t{1} << b);
        xw ^= t;
        zw ^= t;
    }
}

void StabilizerTableau::s(uint32_t q) {
    check_qubit(q);
    size_t w = q / 64;
    unsigned b = q % 64;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &xw = xs_[r * stride_ + w];
        uint64_t &zw = zs_[r * stride_ + w];
        signs_[r] ^= ((xw & zw) >> b) & 1;
        zw ^= xw & (uint64_t{1} << b);
    }
}

void StabilizerTableau::x_gate(uint32_t q) {
    check_qubit(q);
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= z(r, q);
    }
}

void StabilizerTableau::y_gate(uint32_t q) {
    check_qubit(q);
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= x(r, q) ^ z(r, q);
    }
}

void StabilizerTableau::z_gate(uint32_t q) {
    check_qubit(q);
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= x(r, q);
    }
}

void StabilizerTableau::cnot(uint32_t control, uint32_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw Error(ErrorKind::InvalidGate, "CNOT with control == target");
    }
    size_t wc = control / 64, wt = target / 64;
    unsigned bc = control % 64, bt = target % 64;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t *xr = xrow(r);
        uint64_t *zr = zrow(r);
        bool xc = (xr[wc] >> bc) & 1;
        bool zc = (zr[wc] >> bc) & 1;
        bool xt = (xr[wt] >> bt) & 1;
        bool zt = (zr[wt] >> bt) & 1;
        signs_[r] ^= xc & zt & !(xt ^ zc);
        xr[wt] ^= uint64_t(xc) << bt;
        zr[wc] ^= uint64_t(zt) << bc;
    }
}

void StabilizerTableau::clifford2(uint32_t a, uint32_t b, const TwoQubitClifford &c) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw Error(ErrorKind::InvalidGate, "two-qubit Clifford with repeated qubit");
    }
    size_t wa = a / 64, wb = b / 64;
    unsigned ba = a % 64, bb = b % 64;
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t *xr = xrow(r);
        uint64_t *zr = zrow(r);
        unsigned code = unsigned((xr[wa] >> ba) & 1) | unsigned(((zr[wa] >> ba) & 1) << 1) |
                        unsigned(((xr[wb] >> bb) & 1) << 2) | unsigned(((zr[wb] >> bb) & 1) << 3);
        unsigned img = c.pauli_image[code];
        xr[wa] = (xr[wa] & ~(uint64_t{1} << ba)) | (uint64_t(img & 1) << ba);
        zr[wa] = (zr[wa] & ~(uint64_t{1} << ba)) | (uint64_t((img >> 1) & 1) << ba);
        xr[wb] = (xr[wb] & ~(uint64_t{1} << bb)) | (uint64_t((img >> 2) & 1) << bb);
        zr[wb] = (zr[wb] & ~(uint64_t{1} << bb)) | (uint64_t((img >> 3) & 1) << bb);
        signs_[r] ^= (img >> 4) & 1;
    }
}

void StabilizerTableau::apply(const GateOp &op) {
    op.validate(n_);
    switch (op.kind()) {
        case GateKind::I:
            return;
        case GateKind::X:
            return x_gate(op.qubit(0));
        case GateKind::Y:
            return y_gate(op.qubit(0));
        case GateKind::Z:
            return z_gate(op.qubit(0));
        case GateKind::H:
            return h(op.qubit(0));
        case GateKind::S:
            return s(op.qubit(0));
        case GateKind::CNOT:
            return cnot(op.qubit(0), op.qubit(1));
        case GateKind::Clifford2:
            return clifford2(op.qubit(0), op.qubit(1), op.clifford());
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            if (op.angle() == 0) {
                return;
            }
            throw Error(ErrorKind::UnsupportedGate,
                        std::string(gate_name(op.kind())) + " with non-zero angle on the stabilizer backend");
        case GateKind::T:
            throw Error(ErrorKind::UnsupportedGate, "T on the stabilizer backend");
        case GateKind::MeasureZ:
            throw Error(ErrorKind::UnsupportedGate, "M is not a unitary; use measure_z");
    }
}

void StabilizerTableau::copy_row(size_t dst, size_t src) {
    for (size_t k = 0; k < stride_; k++) {
        xrow(dst)[k] = xrow(src)[k];
        zrow(dst)[k] = zrow(src)[k];
    }
    signs_[dst] = signs_[src];
}

void StabilizerTableau::clear_row(size_t r) {
    for (size_t k = 0; k < stride_; k++) {
        xrow(r)[k] = 0;
        zrow(r)[k] = 0;
    }
    signs_[r] = 0;
}

void StabilizerTableau::rowmul(size_t target, size_t source) {
    uint64_t *xt = xrow(target);
    uint64_t *zt = zrow(target);
    const uint64_t *xsrc = xrow(source);
    const uint64_t *zsrc = zrow(source);
    int phase = 2 * signs_[target] + 2 * signs_[source];
    for (size_t k = 0; k < stride_; k++) {
        phase += pauli::product_phase(xsrc[k], zsrc[k], xt[k], zt[k]);
        xt[k] ^= xsrc[k];
        zt[k] ^= zsrc[k];
    }
    signs_[target] = ((phase % 4 + 4) % 4) == 2;
}

bool StabilizerTableau::anticommute(size_t a, size_t b) const {
    int parity = 0;
    for (size_t k = 0; k < stride_; k++) {
        parity ^= std::popcount((xrow(a)[k] & zrow(b)[k]) ^ (zrow(a)[k] & xrow(b)[k])) & 1;
    }
    return parity;
}

bool StabilizerTableau::is_deterministic_z(uint32_t q) const {
    check_qubit(q);
    for (size_t i = 0; i < n_; i++) {
        if (x(n_ + i, q)) {
            return false;
        }
    }
    return true;
}

int StabilizerTableau::measure_z(uint32_t q, double u) {
    check_qubit(q);
    size_t p = 2 * n_;
    for (size_t i = n_; i < 2 * n_; i++) {
        if (x(i, q)) {
            p = i;
            break;
        }
    }
    if (p == 2 * n_) {
        size_t scratch = 2 * n_;
        clear_row(scratch);
        for (size_t i = 0; i < n_; i++) {
            if (x(i, q)) {
                rowmul(scratch, n_ + i);
            }
        }
        return signs_[scratch];
    }
    for (size_t i = 0; i < 2 * n_; i++) {
        if (i != p && i != p - n_ && x(i, q)) {
            rowmul(i, p);
        }
    }
    copy_row(p - n_, p);
    clear_row(p);
    zrow(p)[q / 64] |= uint64_t{1} << (q % 64);
    int outcome = u < 0.5 ? 0 : 1;
    signs_[p] = uint8_t(outcome);
    return outcome;
}

int StabilizerTableau::expectation_z(uint32_t q) const {
    if (!is_deterministic_z(q)) {
        return 0;
    }
    std::vector<uint64_t> x(stride_, 0), z(stride_, 0);
    int phase = 0;
    for (size_t i = 0; i < n_; i++) {
        if (!this->x(i, q)) {
            continue;
        }
        const uint64_t *xs = xrow(n_ + i);
        const uint64_t *zs = zrow(n_ + i);
        phase += 2 * signs_[n_ + i];
        for (size_t k = 0; k < stride_; k++) {
            phase += pauli::product_phase(xs[k], zs[k], x[k], z[k]);
            x[k] ^= xs[k];
            z[k] ^= zs[k];
        }
    }
    return ((phase % 4 + 4) % 4) == 2 ? -1 : 1;
}

int StabilizerTableau::entropy(const QubitSubset &a) const {
    a.validate_nonempty(n_);
    size_t k = a.size();
    BitMatrix m(n_, 2 * k);
    auto idx = a.indices();
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < k; j++) {
            if (x(n_ + i, idx[j])) {
                m.set(i, 2 * j, true);
            }
            if (z(n_ + i, idx[j])) {
                m.set(i, 2 * j + 1, true);
            }
        }
    }
    return int(m.eliminate_rank()) - int(k);
}

void StabilizerTableau::check_invariants() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            if (i < j && anticommute(n_ + i, n_ + j)) {
                throw std::logic_error("stabilizers " + std::to_string(i) + " and " + std::to_string(j) +
                                       " anticommute");
            }
            if (i < j && anticommute(i, j)) {
                throw std::logic_error("destabilizers " + std::to_string(i) + " and " + std::to_string(j) +
                                       " anticommute");
            }
            if (anticommute(i, n_ + j) != (i == j)) {
                throw std::logic_error("destabilizer " + std::to_string(i) + " mispaired with stabilizer " +
                                       std::to_string(j));
            }
        }
    }
    BitMatrix stab(n_, 2 * n_);
    for (size_t i = 0; i < n_; i++) {
        for (size_t q = 0; q < n_; q++) {
            stab.set(i, q, x(n_ + i, q));
            stab.set(i, n_ + q, z(n_ + i, q));
        }
    }
    if (stab.rank() != n_) {
        throw std::logic_error("stabilizer generators are linearly dependent");
    }
}

}  // namespace qfluct
