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

#include "qfluct/theory.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qfluct/error.h"

namespace qfluct {

using cd = std::complex<double>;

double mean_purity_exact(int n, int n_ab) {
    if (n < 1 || n_ab < 0 || n_ab > n) {
        throw Error(ErrorKind::InvalidSize, "mean_purity_exact needs 0 <= N_AB <= N");
    }
    double d = std::ldexp(1.0, n);
    double num = std::ldexp(1.0, n_ab) * std::ldexp(1.0, 2 * (n - n_ab)) + std::ldexp(1.0, n - n_ab) * std::ldexp(1.0, 2 * n_ab);
    return num / (d * (d + 1));
}

double tilde_delta_prediction(int n_t) {
    if (n_t < 0) {
        throw Error(ErrorKind::InvalidSize, "negative T count");
    }
    return std::pow(0.75, n_t);
}

double fourth_moment_prediction(int n, int n_t) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidSize, "fourth_moment_prediction needs N >= 1");
    }
    return (4.0 + tilde_delta_prediction(n_t)) * std::ldexp(1.0, -n);
}

double decay_statistic(int n, double mean_squared_purity) {
    return std::ldexp(mean_squared_purity, n) - 4.0;
}

Permutation Permutation::identity(int t) {
    if (t < 1) {
        throw Error(ErrorKind::InvalidSize, "permutation of no copies");
    }
    Permutation p;
    p.image_.resize(size_t(t));
    std::iota(p.image_.begin(), p.image_.end(), 0);
    return p;
}

Permutation Permutation::parse(std::string_view cycles, int t) {
    Permutation p = identity(t);
    if (cycles == "e" || cycles.empty()) {
        return p;
    }
    std::vector<bool> seen(size_t(t), false);
    size_t i = 0;
    while (i < cycles.size()) {
        if (cycles[i] != '(') {
            throw Error(ErrorKind::InvalidConfig, "bad cycle notation: " + std::string(cycles));
        }
        std::vector<int> cyc;
        for (i++; i < cycles.size() && cycles[i] != ')'; i++) {
            int k = cycles[i] - '1';
            if (k < 0 || k >= t || seen[size_t(k)]) {
                throw Error(ErrorKind::InvalidConfig, "bad cycle notation: " + std::string(cycles));
            }
            seen[size_t(k)] = true;
            cyc.push_back(k);
        }
        if (i == cycles.size()) {
            throw Error(ErrorKind::InvalidConfig, "unterminated cycle: " + std::string(cycles));
        }
        i++;
        for (size_t j = 0; j < cyc.size(); j++) {
            p.image_[size_t(cyc[j])] = cyc[(j + 1) % cyc.size()];
        }
    }
    return p;
}

std::vector<Permutation> Permutation::all(int t) {
    Permutation p = identity(t);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.image_.begin(), p.image_.end()));
    return out;
}

Permutation Permutation::operator*(const Permutation &other) const {
    Permutation p = identity(size());
    for (int k = 0; k < size(); k++) {
        p.image_[size_t(k)] = (*this)(other(k));
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p = identity(size());
    for (int k = 0; k < size(); k++) {
        p.image_[size_t(image_[size_t(k)])] = k;
    }
    return p;
}

int Permutation::num_cycles() const {
    std::vector<bool> seen(size_t(size()), false);
    int c = 0;
    for (int k = 0; k < size(); k++) {
        if (seen[size_t(k)]) {
            continue;
        }
        c++;
        for (int j = k; !seen[size_t(j)]; j = image_[size_t(j)]) {
            seen[size_t(j)] = true;
        }
    }
    return c;
}

std::string Permutation::str() const {
    std::string s;
    std::vector<bool> seen(size_t(size()), false);
    for (int k = 0; k < size(); k++) {
        if (seen[size_t(k)] || image_[size_t(k)] == k) {
            continue;
        }
        s += '(';
        for (int j = k; !seen[size_t(j)]; j = image_[size_t(j)]) {
            seen[size_t(j)] = true;
            s += char('1' + j);
        }
        s += ')';
    }
    return s.empty() ? "e" : s;
}

namespace {

void check_bits(int t, int n) {
    if (t != 2 && t != 4) {
        throw Error(ErrorKind::InvalidConfig, "copy count must be 2 or 4");
    }
    if (n < 1) {
        throw Error(ErrorKind::InvalidSize, "permutation operator needs n >= 1");
    }
    if (t * n > kMaxPermutationBits) {
        throw Error(ErrorKind::Resource, "permutation operator of " + std::to_string(t * n) + " qubits exceeds the brute-force cap");
    }
}

/// R_pi over n sites by direct bit shuffling: output bit (s, k) = input bit (s, pi(k)).
SparseC tensor_permutation(const Permutation &pi, int n) {
    const int t = pi.size();
    const int bits = t * n;
    const size_t dim = size_t{1} << bits;
    auto pos = [&](int s, int c) { return bits - 1 - (s * t + c); };
    std::vector<Eigen::Triplet<cd>> trip;
    trip.reserve(dim);
    for (size_t in = 0; in < dim; in++) {
        size_t out = 0;
        for (int s = 0; s < n; s++) {
            for (int k = 0; k < t; k++) {
                out |= ((in >> pos(s, pi(k))) & 1) << pos(s, k);
            }
        }
        trip.emplace_back(Eigen::Index(out), Eigen::Index(in), 1.0);
    }
    SparseC m{Eigen::Index(dim), Eigen::Index(dim)};
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

SparseC sparse_kron(const SparseC &a, const SparseC &b) {
    SparseC out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<cd>> trip;
    trip.reserve(size_t(a.nonZeros() * b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ka++) {
        for (SparseC::InnerIterator ia(a, ka); ia; ++ia) {
            for (int kb = 0; kb < b.outerSize(); kb++) {
                for (SparseC::InnerIterator ib(b, kb); ib; ++ib) {
                    trip.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

SparseC site_permutation(const Permutation &pi) {
    check_bits(pi.size(), 1);
    return tensor_permutation(pi, 1);
}

Eigen::MatrixXcd pi4_site() {
    const cd i{0, 1};
    Eigen::Matrix2cd paulis[4];
    paulis[0] << 1, 0, 0, 1;
    paulis[1] << 0, 1, 1, 0;
    paulis[2] << 0, -i, i, 0;
    paulis[3] << 1, 0, 0, -1;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(16, 16);
    for (const auto &p : paulis) {
        Eigen::MatrixXcd pm = p;
        sum += kron(kron(kron(pm, pm), pm), pm);
    }
    return 0.5 * sum;
}

SparseC pi4_operator(int n) {
    check_bits(4, n);
    SparseC site = pi4_site().sparseView();
    SparseC out = site;
    for (int s = 1; s < n; s++) {
        out = sparse_kron(out, site);
    }
    return out;
}

PermutationOperator build_permutation_operator(std::string_view label, int t, int n) {
    check_bits(t, n);
    PermutationOperator op;
    op.t = t;
    op.n = n;
    op.label = std::string(label);
    std::string_view cycles = label;
    bool with_pi4 = false;
    if (label.substr(0, 3) == "pi4") {
        if (t != 4) {
            throw Error(ErrorKind::InvalidConfig, "pi4 elements need t = 4");
        }
        with_pi4 = true;
        cycles = label.substr(3);
        if (!cycles.empty()) {
            if (cycles[0] != '.') {
                throw Error(ErrorKind::InvalidConfig, "bad label: " + std::string(label));
            }
            cycles = cycles.substr(1);
        }
    }
    op.matrix = tensor_permutation(Permutation::parse(cycles, t), n);
    if (with_pi4) {
        op.matrix = (op.matrix * pi4_operator(n)).pruned();
    }
    return op;
}

std::complex<double> hs_inner(const SparseC &a, const SparseC &b) {
    return a.conjugate().cwiseProduct(b).sum();
}

std::complex<double> trace(const SparseC &a) {
    cd total = 0;
    for (Eigen::Index k = 0; k < std::min(a.rows(), a.cols()); k++) {
        total += a.coeff(k, k);
    }
    return total;
}

Eigen::MatrixXd permutation_gram(int t, int n) {
    check_bits(t, n);
    auto perms = Permutation::all(t);
    std::vector<SparseC> ops;
    for (const auto &p : perms) {
        ops.push_back(tensor_permutation(p, n));
    }
    Eigen::MatrixXd g(perms.size(), perms.size());
    for (size_t i = 0; i < ops.size(); i++) {
        for (size_t j = 0; j < ops.size(); j++) {
            g(Eigen::Index(i), Eigen::Index(j)) = hs_inner(ops[i], ops[j]).real();
        }
    }
    return g;
}

Eigen::MatrixXcd lemma1_matrix(int n) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidSize, "lemma1_matrix needs n >= 1");
    }
    if (n > 2) {
        throw Error(ErrorKind::Resource, "lemma1_matrix is brute force and limited to n <= 2");
    }
    const int bits = 4 * n;
    const Eigen::Index dim = Eigen::Index(1) << bits;
    // T^{(x)4} on site 0 of every copy is diagonal: e^{i pi/4 * popcount(site-0 bits)}.
    Eigen::VectorXcd d(dim);
    for (Eigen::Index x = 0; x < dim; x++) {
        int ones = std::popcount(uint64_t(x) >> (bits - 4));
        d(x) = std::polar(1.0, std::numbers::pi / 4 * ones);
    }
    std::vector<Eigen::MatrixXcd> ops;
    for (const auto &label : kHatS3Labels) {
        ops.push_back(Eigen::MatrixXcd(build_permutation_operator(label, 4, n).matrix));
    }
    Eigen::MatrixXcd out(6, 6);
    for (size_t j = 0; j < 6; j++) {
        Eigen::MatrixXcd conj = d.asDiagonal() * ops[j] * d.conjugate().asDiagonal();
        for (size_t i = 0; i < 6; i++) {
            out(Eigen::Index(i), Eigen::Index(j)) = ops[i].conjugate().cwiseProduct(conj).sum();
        }
    }
    return out;
}

}  // namespace qfluct
