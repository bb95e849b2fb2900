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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "qfluct/error.h"
#include "qfluct/theory.h"

namespace qfluct {
namespace {

Eigen::MatrixXcd dense_kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

template <class F>
ErrorKind kind_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Io;
}

TEST(Predictions, ClosedFormValues) {
    EXPECT_DOUBLE_EQ(mean_purity_exact(8, 4), 8192.0 / 65792.0);
    EXPECT_NEAR(mean_purity_exact(8, 4), 0.1245136, 1e-7);
    EXPECT_DOUBLE_EQ(mean_purity_exact(2, 1), 0.8);
    EXPECT_DOUBLE_EQ(mean_purity_exact(5, 0), 1.0);
    EXPECT_DOUBLE_EQ(mean_purity_exact(5, 5), 1.0);
    EXPECT_DOUBLE_EQ(tilde_delta_prediction(4), 0.31640625);
    EXPECT_NEAR(-std::log(tilde_delta_prediction(1)), 0.28768, 1e-5);
    EXPECT_NEAR(fourth_moment_prediction(12, 4), 1.0538e-3, 1e-7);
    EXPECT_DOUBLE_EQ(decay_statistic(12, fourth_moment_prediction(12, 4)), 0.31640625);
}

TEST(Predictions, MeanPurityIsSymmetricUnderComplement) {
    for (int n = 1; n <= 12; n++) {
        for (int k = 0; k <= n; k++) {
            EXPECT_DOUBLE_EQ(mean_purity_exact(n, k), mean_purity_exact(n, n - k));
        }
    }
    EXPECT_EQ(kind_of([] { mean_purity_exact(4, 5); }), ErrorKind::InvalidSize);
}

TEST(PermutationAlgebra, ParseAndCompose) {
    auto p = Permutation::parse("(12)(34)", 4);
    EXPECT_EQ(p(0), 1);
    EXPECT_EQ(p(1), 0);
    EXPECT_EQ(p(2), 3);
    EXPECT_EQ(p.num_cycles(), 2);
    EXPECT_EQ(p * p, Permutation::identity(4));
    auto c = Permutation::parse("(234)", 4);
    EXPECT_EQ(c.num_cycles(), 2);
    EXPECT_EQ(c * c * c, Permutation::identity(4));
    EXPECT_EQ(c.inverse(), Permutation::parse("(243)", 4));
    auto a = Permutation::parse("(12)", 3), b = Permutation::parse("(23)", 3);
    EXPECT_EQ((a * b)(2), 0);  // b sends 3 to 2, then a sends 2 to 1
    EXPECT_EQ(Permutation::parse("e", 4).num_cycles(), 4);
    EXPECT_EQ(Permutation::all(4).size(), 24u);
    EXPECT_EQ(Permutation::parse(p.str(), 4), p);
    EXPECT_EQ(kind_of([] { Permutation::parse("(15)", 4); }), ErrorKind::InvalidConfig);
    EXPECT_EQ(kind_of([] { Permutation::parse("(11)", 4); }), ErrorKind::InvalidConfig);
    EXPECT_EQ(kind_of([] { Permutation::parse("12", 4); }), ErrorKind::InvalidConfig);
}

TEST(PermutationOperators, SingleSiteTraces) {
    EXPECT_EQ(trace(site_permutation(Permutation::parse("(12)", 2))), std::complex<double>(2));
    EXPECT_EQ(trace(site_permutation(Permutation::identity(2))), std::complex<double>(4));
}

TEST(PermutationOperators, TraceIsTensorPower) {
    for (const auto &pi : Permutation::all(4)) {
        double site = trace(site_permutation(pi)).real();
        EXPECT_EQ(site, std::ldexp(1.0, pi.num_cycles()));
        for (int n = 1; n <= 3; n++) {
            auto op = build_permutation_operator(pi.str(), 4, n);
            EXPECT_EQ(trace(op.matrix), std::complex<double>(std::pow(site, n))) << pi.str() << " n=" << n;
        }
    }
}

TEST(PermutationOperators, MatchesKroneckerPowerOfSiteOperator) {
    for (const auto &pi : Permutation::all(4)) {
        Eigen::MatrixXcd site = Eigen::MatrixXcd(site_permutation(pi));
        Eigen::MatrixXcd expect = dense_kron(site, site);
        Eigen::MatrixXcd got = Eigen::MatrixXcd(build_permutation_operator(pi.str(), 4, 2).matrix);
        EXPECT_EQ((expect - got).cwiseAbs().maxCoeff(), 0.0) << pi.str();
    }
}

TEST(PermutationOperators, SiteOperatorPermutesTensorFactors) {
    // r_pi |x_1 ... x_t> = |x_{pi(1)} ... x_{pi(t)}>, bit order big-endian.
    auto pi = Permutation::parse("(1243)", 4);
    Eigen::MatrixXcd r = Eigen::MatrixXcd(site_permutation(pi));
    for (int in = 0; in < 16; in++) {
        int out = 0;
        for (int k = 0; k < 4; k++) {
            out |= ((in >> (3 - pi(k))) & 1) << (3 - k);
        }
        EXPECT_EQ(r(out, in), std::complex<double>(1));
        EXPECT_EQ(Eigen::VectorXcd(r.col(in)).cwiseAbs().sum(), 1.0);
    }
}

TEST(Pi4, SquaresToTwiceItself) {
    Eigen::MatrixXcd p = pi4_site();
    EXPECT_LT((p * p - 2 * p).cwiseAbs().maxCoeff(), 1e-14);
    Eigen::MatrixXcd p2 = Eigen::MatrixXcd(pi4_operator(2));
    EXPECT_LT((p2 * p2 - 4 * p2).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((p2 - dense_kron(p, p)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Pi4, ClosedFormOnBasisStates) {
    // Half the Pauli sum keeps |x> iff the four bits have even parity, and then
    // maps it to |x> + |~x>.
    Eigen::MatrixXcd p = pi4_site();
    for (int x = 0; x < 16; x++) {
        for (int y = 0; y < 16; y++) {
            bool even = std::popcount(unsigned(x)) % 2 == 0;
            double expect = even && (y == x || y == (x ^ 15)) ? 1.0 : 0.0;
            EXPECT_NEAR(std::abs(p(y, x) - expect), 0.0, 1e-15) << x << "," << y;
        }
    }
}

TEST(Pi4, CommutesWithPermutations) {
    SparseC p = pi4_operator(1);
    for (const auto &pi : Permutation::all(4)) {
        SparseC r = site_permutation(pi);
        Eigen::MatrixXcd diff = Eigen::MatrixXcd(SparseC(r * p - p * r));
        EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(Gram, PositiveSymmetricAndCycleCounting) {
    for (int n = 1; n <= 2; n++) {
        Eigen::MatrixXd g = permutation_gram(4, n);
        auto perms = Permutation::all(4);
        ASSERT_EQ(g.rows(), 24);
        EXPECT_EQ((g - g.transpose()).cwiseAbs().maxCoeff(), 0.0);
        for (int i = 0; i < 24; i++) {
            for (int j = 0; j < 24; j++) {
                EXPECT_GT(g(i, j), 0.0);
                EXPECT_EQ(g(i, j), std::round(g(i, j)));
                int cycles = (perms[size_t(i)].inverse() * perms[size_t(j)]).num_cycles();
                EXPECT_EQ(g(i, j), std::ldexp(1.0, n * cycles));
            }
        }
    }
}

TEST(TGateContraction, DiagonalAndOffDiagonalBounds) {
    for (int n = 1; n <= 2; n++) {
        Eigen::MatrixXcd m = lemma1_matrix(n);
        ASSERT_EQ(m.rows(), 6);
        double diag = 12.0 * std::ldexp(1.0, 4 * (n - 1));
        double off = 4.0 * std::ldexp(1.0, 3 * (n - 1));
        for (int i = 0; i < 6; i++) {
            for (int j = 0; j < 6; j++) {
                if (i == j) {
                    EXPECT_LT(std::abs(m(i, j) - diag), 1e-9);
                } else {
                    EXPECT_LE(std::abs(m(i, j)), off + 1e-9);
                }
            }
        }
    }
    EXPECT_EQ(kind_of([] { lemma1_matrix(3); }), ErrorKind::Resource);
    EXPECT_EQ(kind_of([] { lemma1_matrix(0); }), ErrorKind::InvalidSize);
}

TEST(Limits, ResourceAndLabelErrors) {
    EXPECT_EQ(kind_of([] { build_permutation_operator("e", 4, 4); }), ErrorKind::Resource);
    EXPECT_EQ(kind_of([] { build_permutation_operator("e", 3, 2); }), ErrorKind::InvalidConfig);
    EXPECT_EQ(kind_of([] { build_permutation_operator("pi4", 2, 2); }), ErrorKind::InvalidConfig);
    EXPECT_EQ(kind_of([] { build_permutation_operator("pi4(23)", 4, 1); }), ErrorKind::InvalidConfig);
    for (const auto &label : kHatS3Labels) {
        auto op = build_permutation_operator(label, 4, 1);
        EXPECT_EQ(op.matrix.rows(), 16);
        EXPECT_GT(op.matrix.nonZeros(), 0);
    }
}

}  // namespace
}  // namespace qfluct
