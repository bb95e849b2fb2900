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

#include <cmath>
#include <random>

#include "qfluct/circuits.h"
#include "qfluct/error.h"
#include "qfluct/observables.h"
#include "qfluct/simulate.h"
#include "test_support.h"

namespace qfluct {
namespace {

PureState bell() {
    PureState s(2);
    s.apply(GateOp::single(GateKind::H, 0));
    s.apply(GateOp::cnot(0, 1));
    return s;
}

TEST(MutualInfo, ProductStateIsZero) {
    PureState s(4);
    s.apply(GateOp::single(GateKind::H, 1));
    EXPECT_NEAR(mutual_info2(s, QubitSubset({0, 1}), QubitSubset({3})), 0.0, 1e-12);
    StabilizerTableau t(4);
    EXPECT_EQ(mutual_info2(t, QubitSubset({0}), QubitSubset({2, 3})), 0.0);
}

TEST(MutualInfo, BellPairIsTwoBits) {
    EXPECT_NEAR(mutual_info2(bell(), QubitSubset({0}), QubitSubset({1})), 2.0, 1e-12);
    StabilizerTableau t(2);
    t.h(0);
    t.cnot(0, 1);
    EXPECT_EQ(mutual_info2(t, QubitSubset({0}), QubitSubset({1})), 2.0);
}

TEST(MutualInfo, ComplementaryCutIsTwiceEntropy) {
    Rng rng(1);
    PureState s(6);
    run_ops(s, testing::random_clifford_ops(6, 80, rng), rng);
    for (int k = 0; k < 6; k++) {
        s.apply(GateOp::single(GateKind::T, uint32_t(k)));
    }
    run_ops(s, testing::random_clifford_ops(6, 40, rng), rng);
    QubitSubset a({0, 2, 5});
    EXPECT_NEAR(mutual_info2(s, a, a.complement(6)), 2 * s.renyi_entropy(a, 2), 1e-10);
}

TEST(MutualInfo, OverlapAndEmptyRejected) {
    PureState s(3);
    for (auto [a, b] : {std::pair{QubitSubset({0, 1}), QubitSubset({1, 2})}, std::pair{QubitSubset(), QubitSubset({1})}}) {
        try {
            mutual_info2(s, a, b);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidSubset);
        }
    }
}

TEST(Fluctuation, Examples) {
    EXPECT_EQ(fluctuation(std::vector<double>{1, 1, 1, 1}), 0.0);
    EXPECT_DOUBLE_EQ(fluctuation(std::vector<double>{0, 2}), 1.0);
    EXPECT_NEAR(fluctuation(std::vector<double>{1, 2, 3, 4}), std::sqrt(1.25), 1e-15);
    EXPECT_NEAR(fluctuation(std::vector<double>{1, 2, 3, 4}), 1.11803, 1e-5);
}

TEST(Fluctuation, NeedsTwoSamples) {
    try {
        fluctuation(std::vector<double>{1.0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientData);
    }
}

TEST(Kurtosis, Examples) {
    std::vector<double> two_point;
    for (int i = 0; i < 100; i++) {
        two_point.push_back(i % 2 ? 1.0 : -1.0);
    }
    EXPECT_NEAR(kurtosis(two_point), 1.0, 1e-12);
    std::mt19937_64 g(7);
    std::normal_distribution<double> normal;
    std::vector<double> gauss(1000000);
    for (auto &x : gauss) {
        x = normal(g);
    }
    EXPECT_NEAR(kurtosis(gauss), 3.0, 0.05);
}

TEST(Kurtosis, DegenerateAndShortSamples) {
    try {
        kurtosis(std::vector<double>(10, 2.5));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateSample);
    }
    try {
        kurtosis(std::vector<double>{1, 2, 3});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientData);
    }
}

TEST(Kurtosis, Combination) {
    EXPECT_EQ(kurt_combo(3, 3, 3), 3.0);
    EXPECT_EQ(kurt_combo(1, 1, 1), 1.0);
    EXPECT_NEAR(kurt_combo(2.5, 2.7, 1.9), 3.3, 1e-12);
}

TEST(StatisticsProperty, AffineBehaviour) {
    std::mt19937_64 g(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 50; trial++) {
        std::vector<double> x(5 + g() % 50);
        for (auto &v : x) {
            v = u(g) * u(g);
        }
        double a = u(g), b = u(g);
        if (std::abs(a) < 0.1) {
            a = 0.7;
        }
        std::vector<double> y(x.size());
        for (size_t i = 0; i < x.size(); i++) {
            y[i] = a * x[i] + b;
        }
        EXPECT_NEAR(fluctuation(y), std::abs(a) * fluctuation(x), 1e-9 * (1 + fluctuation(y)));
        EXPECT_NEAR(kurtosis(y), kurtosis(x), 1e-8 * kurtosis(x));
    }
}

TEST(SampleRecordProperty, MutualInfoIdentityHolds) {
    Rng rng(5);
    for (int trial = 0; trial < 20; trial++) {
        Circuit c = gen_tdoped(8, int(rng.below(6)), rng);
        PureState s(8);
        run_ops(s, c.ops, rng);
        SampleRecord r;
        measure_record(s, QubitSubset({0, 1}), QubitSubset({6, 7}), r);
        EXPECT_NEAR(r.I2, r.S2_A + r.S2_B - r.S2_AB, 1e-9);
        EXPECT_NEAR(r.I2, mutual_info2(s, QubitSubset({0, 1}), QubitSubset({6, 7})), 1e-9);
        EXPECT_LE(r.S4_AB, r.S2_AB + 1e-9);
        EXPECT_TRUE(std::isfinite(r.Sz_AB));
        EXPECT_NEAR(r.Sz_AB, r.Sz_A + r.Sz_B, 1e-12);
    }
}

TEST(SampleRecordProperty, BackendsAgreeOnCliffordStates) {
    Rng rng(6);
    for (int trial = 0; trial < 30; trial++) {
        auto ops = testing::random_clifford_ops(8, 60, rng);
        PureState s(8);
        StabilizerTableau t(8);
        Rng m1(trial), m2(trial);
        run_ops(s, ops, m1);
        run_ops(t, ops, m2);
        SampleRecord rs, rt;
        measure_record(s, QubitSubset({0, 1}), QubitSubset({4, 5}), rs);
        measure_record(t, QubitSubset({0, 1}), QubitSubset({4, 5}), rt);
        EXPECT_NEAR(rs.I2, rt.I2, 1e-9);
        EXPECT_NEAR(rs.S4_AB, rt.S4_AB, 1e-9);
        EXPECT_NEAR(rs.Sz_A, rt.Sz_A, 1e-9);
        EXPECT_NEAR(rs.Sz_AB, rt.Sz_AB, 1e-9);
    }
}

}  // namespace
}  // namespace qfluct
