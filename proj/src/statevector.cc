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

#include "qfluct/statevector.h"

#include <bit>
#include <cmath>

#include "qfluct/error.h"

namespace qfluct {

namespace {

inline size_t insert_zero_bit(size_t v, unsigned pos) {
    size_t low = v & ((size_t{1} << pos) - 1);
    return ((v >> pos) << (pos + 1)) | low;
}

std::vector<size_t> deposit_table(std::span<const uint32_t> qubits) {
    std::vector<size_t> table(size_t{1} << qubits.size());
    for (size_t r = 0; r < table.size(); r++) {
        size_t idx = 0;
        for (size_t j = 0; j < qubits.size(); j++) {
            if ((r >> j) & 1) {
                idx |= size_t{1} << qubits[j];
            }
        }
        table[r] = idx;
    }
    return table;
}

}  // namespace

PureState::PureState(size_t n, size_t max_qubits) : n_(n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidSize, "state needs at least one qubit");
    }
    if (n > max_qubits) {
        throw Error(ErrorKind::Resource, std::to_string(n) + " qubits exceeds the statevector cap of " +
                                             std::to_string(max_qubits));
    }
    amps_.assign(size_t{1} << n, 0);
    amps_[0] = 1;
}

PureState PureState::from_amplitudes(std::vector<cdouble> amplitudes, double norm_tolerance) {
    size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::InvalidSize, "amplitude count must be a power of two >= 2");
    }
    if (std::bit_width(dim) - 1 > int(kDefaultMaxQubits)) {
        throw Error(ErrorKind::Resource, "amplitude vector exceeds the statevector cap");
    }
    PureState s;
    s.n_ = std::bit_width(dim) - 1;
    s.amps_ = std::move(amplitudes);
    if (!(std::abs(s.norm() - 1) <= norm_tolerance)) {
        throw Error(ErrorKind::NumericalState, "amplitudes are not normalized");
    }
    return s;
}

double PureState::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void PureState::check_qubit(uint32_t q) const {
    if (q >= n_) {
        throw Error(ErrorKind::InvalidGate,
                    "qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

void PureState::apply_single(uint32_t q, const std::array<cdouble, 4> &m) {
    check_qubit(q);
    const size_t stride = size_t{1} << q;
    const size_t dim = amps_.size();
    if (m[1] == cdouble(0) && m[2] == cdouble(0)) {
        const bool skip0 = m[0] == cdouble(1);
        for (size_t base = 0; base < dim; base += 2 * stride) {
            for (size_t i = base; i < base + stride; i++) {
                if (!skip0) {
                    amps_[i] *= m[0];
                }
                amps_[i + stride] *= m[3];
            }
        }
        return;
    }
    if (m[0] == cdouble(0) && m[3] == cdouble(0)) {
        for (size_t base = 0; base < dim; base += 2 * stride) {
            for (size_t i = base; i < base + stride; i++) {
                cdouble a0 = amps_[i];
                amps_[i] = m[1] * amps_[i + stride];
                amps_[i + stride] = m[2] * a0;
            }
        }
        return;
    }
    for (size_t base = 0; base < dim; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            cdouble a0 = amps_[i];
            cdouble a1 = amps_[i + stride];
            amps_[i] = m[0] * a0 + m[1] * a1;
            amps_[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void PureState::apply_cnot(uint32_t control, uint32_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw Error(ErrorKind::InvalidGate, "CNOT with control == target");
    }
    const size_t cbit = size_t{1} << control;
    const size_t tbit = size_t{1} << target;
    const unsigned lo = std::min(control, target), hi = std::max(control, target);
    const size_t quarter = amps_.size() / 4;
    for (size_t k = 0; k < quarter; k++) {
        size_t i = insert_zero_bit(insert_zero_bit(k, lo), hi) | cbit;
        std::swap(amps_[i], amps_[i | tbit]);
    }
}

void PureState::apply_two(uint32_t a, uint32_t b, const std::array<cdouble, 16> &m) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw Error(ErrorKind::InvalidGate, "two-qubit gate with repeated qubit");
    }
    const size_t abit = size_t{1} << a;
    const size_t bbit = size_t{1} << b;
    const unsigned lo = std::min(a, b), hi = std::max(a, b);
    const size_t quarter = amps_.size() / 4;
    for (size_t k = 0; k < quarter; k++) {
        size_t i0 = insert_zero_bit(insert_zero_bit(k, lo), hi);
        size_t idx[4] = {i0, i0 | abit, i0 | bbit, i0 | abit | bbit};
        cdouble v[4] = {amps_[idx[0]], amps_[idx[1]], amps_[idx[2]], amps_[idx[3]]};
        for (int r = 0; r < 4; r++) {
            amps_[idx[r]] = m[r * 4 + 0] * v[0] + m[r * 4 + 1] * v[1] + m[r * 4 + 2] * v[2] + m[r * 4 + 3] * v[3];
        }
    }
}

void PureState::apply(const GateOp &op) {
    op.validate(n_);
    switch (op.kind()) {
        case GateKind::I:
            return;
        case GateKind::CNOT:
            return apply_cnot(op.qubit(0), op.qubit(1));
        case GateKind::Clifford2: {
            const auto &m = op.clifford().matrix;
            double dev = 0;
            for (int r = 0; r < 4; r++) {
                for (int c = 0; c < 4; c++) {
                    cdouble acc = 0;
                    for (int k = 0; k < 4; k++) {
                        acc += std::conj(m[k * 4 + r]) * m[k * 4 + c];
                    }
                    dev = std::max(dev, std::abs(acc - (r == c ? 1.0 : 0.0)));
                }
            }
            if (dev > 1e-8) {
                throw Error(ErrorKind::InvalidGate, "two-qubit matrix is not unitary");
            }
            return apply_two(op.qubit(0), op.qubit(1), m);
        }
        case GateKind::MeasureZ:
            throw Error(ErrorKind::InvalidGate, "M is not a unitary; use measure_z");
        default:
            return apply_single(op.qubit(0), single_qubit_matrix(op.kind(), op.angle()));
    }
}

int PureState::measure_z(uint32_t q, double u) {
    check_qubit(q);
    const size_t bit = size_t{1} << q;
    double p0 = 0, p1 = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        (i & bit ? p1 : p0) += std::norm(amps_[i]);
    }
    if (p0 < 1e-12 && p1 < 1e-12) {
        throw Error(ErrorKind::NumericalState, "both measurement branches have vanishing weight");
    }
    int outcome = u < p0 ? 0 : 1;
    double scale = 1 / std::sqrt(outcome ? p1 : p0);
    for (size_t i = 0; i < amps_.size(); i++) {
        if (bool(i & bit) == bool(outcome)) {
            amps_[i] *= scale;
        } else {
            amps_[i] = 0;
        }
    }
    return outcome;
}

Eigen::MatrixXcd PureState::reshape(const QubitSubset &rows) const {
    QubitSubset cols = rows.complement(n_);
    auto row_dep = deposit_table(rows.indices());
    auto col_dep = deposit_table(cols.indices());
    Eigen::MatrixXcd m(row_dep.size(), col_dep.size());
    for (size_t c = 0; c < col_dep.size(); c++) {
        for (size_t r = 0; r < row_dep.size(); r++) {
            m(Eigen::Index(r), Eigen::Index(c)) = amps_[row_dep[r] | col_dep[c]];
        }
    }
    return m;
}

Eigen::MatrixXcd PureState::small_side_density(const QubitSubset &a) const {
    QubitSubset side = 2 * a.size() > n_ ? a.complement(n_) : a;
    Eigen::MatrixXcd m = reshape(side);
    return m * m.adjoint();
}

double PureState::purity(const QubitSubset &a) const {
    a.validate_nonempty(n_);
    if (a.size() == n_) {
        return 1.0;
    }
    return small_side_density(a).squaredNorm();
}

double PureState::renyi_entropy(const QubitSubset &a, int order) const {
    a.validate_nonempty(n_);
    if (order != 2 && order != 4) {
        throw Error(ErrorKind::InvalidConfig, "Renyi order must be 2 or 4");
    }
    if (a.size() == n_) {
        return 0.0;
    }
    Eigen::MatrixXcd rho = small_side_density(a);
    if (order == 2) {
        return -std::log2(rho.squaredNorm());
    }
    Eigen::MatrixXcd rho2 = rho * rho;
    return -std::log2(rho2.squaredNorm()) / 3;
}

double PureState::spin_z(const QubitSubset &a) const {
    a.validate_nonempty(n_);
    const uint64_t mask = a.mask();
    const double k = double(a.size());
    double total = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        total += std::norm(amps_[i]) * (k - 2.0 * std::popcount(uint64_t(i) & mask));
    }
    return total;
}

ReducedDensity PureState::reduced_density(const QubitSubset &a) const {
    a.validate_nonempty(n_);
    if (a.size() == n_) {
        Eigen::Map<const Eigen::VectorXcd> v(amps_.data(), Eigen::Index(amps_.size()));
        return {a.size(), v * v.adjoint()};
    }
    Eigen::MatrixXcd m = reshape(a);
    return {a.size(), m * m.adjoint()};
}

}  // namespace qfluct
