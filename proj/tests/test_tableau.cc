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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <numbers>

#include "qfluct/circuits.h"
#include "qfluct/clifford_sampling.h"
#include "qfluct/error.h"
#include "qfluct/simulate.h"
#include "qfluct/tableau.h"
#include "test_support.h"

namespace qfluct {
namespace {

TEST(Tableau, InitialStabilizersAreSingleZ) {
    StabilizerTableau t(2);
    EXPECT_EQ(t.stabilizer_str(0), "+ZI");
    EXPECT_EQ(t.stabilizer_str(1), "+IZ");
    EXPECT_EQ(t.destabilizer_str(0), "+XI");
    EXPECT_EQ(t.destabilizer_str(1), "+IX");
}

TEST(Tableau, ZeroQubitsRejected) {
    try {
        StabilizerTableau t(0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidSize);
    }
}

TEST(Tableau, SingleQubitMeasuresZeroDeterministically) {
    StabilizerTableau t(1);
    EXPECT_TRUE(t.is_deterministic_z(0));
    EXPECT_EQ(t.measure_z(0, 0.999), 0);
    EXPECT_EQ(t.expectation_z(0), 1);
}

TEST(Tableau, ProductStateHasZeroEntropy) {
    StabilizerTableau t(4);
    for (uint32_t mask = 1; mask < 16; mask++) {
        std::vector<uint32_t> idx;
        for (uint32_t q = 0; q < 4; q++) {
            if (mask >> q & 1) {
                idx.push_back(q);
            }
        }
        EXPECT_EQ(t.entropy(QubitSubset(idx)), 0);
    }
}

TEST(Tableau, HadamardMapsZToX) {
    StabilizerTableau t(1);
    t.apply(GateOp::single(GateKind::H, 0));
    EXPECT_EQ(t.stabilizer_str(0), "+X");
    EXPECT_FALSE(t.is_deterministic_z(0));
    EXPECT_EQ(t.expectation_z(0), 0);
}

TEST(Tableau, PauliSignsTrackConjugation) {
    StabilizerTableau t(1);
    t.apply(GateOp::single(GateKind::X, 0));
    EXPECT_EQ(t.stabilizer_str(0), "-Z");
    EXPECT_EQ(t.expectation_z(0), -1);
    EXPECT_EQ(t.measure_z(0, 0.0), 1);
    t.apply(GateOp::single(GateKind::H, 0));
    t.apply(GateOp::single(GateKind::S, 0));
    // H(-Z)H = -X, S(-X)S^dag = -Y.
    EXPECT_EQ(t.stabilizer_str(0), "-Y");
}

TEST(Tableau, BellStateStabilizers) {
    StabilizerTableau t(2);
    t.apply(GateOp::single(GateKind::H, 0));
    t.apply(GateOp::cnot(0, 1));
    EXPECT_EQ(t.stabilizer_str(0), "+XX");
    EXPECT_EQ(t.stabilizer_str(1), "+ZZ");
    EXPECT_EQ(t.entropy(QubitSubset({0})), 1);
    EXPECT_EQ(t.entropy(QubitSubset({0, 1})), 0);
}

TEST(Tableau, NonCliffordGatesRejected) {
    StabilizerTableau t(2);
    auto expect_unsupported = [&](const GateOp &op) {
        try {
            t.apply(op);
            FAIL() << gate_name(op.kind());
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::UnsupportedGate);
        }
    };
    expect_unsupported(GateOp::single(GateKind::T, 0));
    expect_unsupported(GateOp::rotation(GateKind::RZ, 0, 0.1));
    expect_unsupported(GateOp::rotation(GateKind::RX, 1, std::numbers::pi / 4));
    StabilizerTableau before = t;
    t.apply(GateOp::rotation(GateKind::RY, 1, 0.0));
    EXPECT_EQ(t, before);
}

TEST(Tableau, EmptyOrOutOfRangeSubsetRejected) {
    StabilizerTableau t(3);
    for (auto subset : {QubitSubset(), QubitSubset({3})}) {
        try {
            t.entropy(subset);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidSubset);
        }
    }
}

TEST(Tableau, BellMeasurementsAreCorrelated) {
    Rng rng(3);
    int ones = 0;
    for (int trial = 0; trial < 200; trial++) {
        StabilizerTableau t(2);
        t.h(0);
        t.cnot(0, 1);
        int a = t.measure_z(0, rng);
        EXPECT_TRUE(t.is_deterministic_z(1));
        int b = t.measure_z(1, rng);
        EXPECT_EQ(a, b);
        ones += a;
    }
    EXPECT_GT(ones, 50);
    EXPECT_LT(ones, 150);
}

TEST(Tableau, PlusStateOutcomeFrequency) {
    Rng rng(2024);
    const int trials = 10000;
    int zeros = 0;
    for (int i = 0; i < trials; i++) {
        StabilizerTableau t(1);
        t.h(0);
        zeros += t.measure_z(0, rng) == 0;
    }
    double freq = double(zeros) / trials;
    double sigma = std::sqrt(0.25 / trials);
    EXPECT_NEAR(freq, 0.5, 3 * sigma);
}

TEST(Tableau, MeasurementOutcomeFollowsUniformThreshold) {
    StabilizerTableau a(1), b(1);
    a.h(0);
    b.h(0);
    EXPECT_EQ(a.measure_z(0, 0.49), 0);
    EXPECT_EQ(b.measure_z(0, 0.51), 1);
    EXPECT_EQ(a.stabilizer_str(0), "+Z");
    EXPECT_EQ(b.stabilizer_str(0), "-Z");
}

TEST(Tableau, GhzEntropyIsOneForEveryProperCut) {
    StabilizerTableau t(5);
    t.h(0);
    for (uint32_t q = 1; q < 5; q++) {
        t.cnot(0, q);
    }
    for (uint32_t mask = 1; mask < 31; mask++) {
        std::vector<uint32_t> idx;
        for (uint32_t q = 0; q < 5; q++) {
            if (mask >> q & 1) {
                idx.push_back(q);
            }
        }
        EXPECT_EQ(t.entropy(QubitSubset(idx)), 1) << mask;
    }
    EXPECT_EQ(t.entropy(QubitSubset::range(0, 5)), 0);
}

// Invariants after every op of random Clifford circuits with measurements,
// plus entropy bounds and complement symmetry.
TEST(TableauProperty, InvariantsAndEntropyBounds) {
    Rng gen(77), meas(78);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 2 + gen.below(9);
        StabilizerTableau t(n);
        auto ops = testing::random_clifford_ops(n, 60, gen, true);
        for (const auto &op : ops) {
            if (op.kind() == GateKind::MeasureZ) {
                t.measure_z(op.qubit(0), meas);
            } else {
                t.apply(op);
            }
            ASSERT_NO_THROW(t.check_invariants());
        }
        for (int s = 0; s < 10; s++) {
            std::vector<uint32_t> idx;
            for (uint32_t q = 0; q < n; q++) {
                if (gen.bit()) {
                    idx.push_back(q);
                }
            }
            if (idx.empty() || idx.size() == n) {
                continue;
            }
            QubitSubset a(idx);
            int s_a = t.entropy(a);
            EXPECT_GE(s_a, 0);
            EXPECT_LE(size_t(s_a), std::min(a.size(), n - a.size()));
            EXPECT_EQ(s_a, t.entropy(a.complement(n)));
        }
    }
}

TEST(TableauProperty, MeasurementIsIdempotent) {
    Rng gen(12), meas(13);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 2 + gen.below(6);
        StabilizerTableau t(n);
        run_ops(t, testing::random_clifford_ops(n, 40, gen), meas);
        uint32_t q = uint32_t(gen.below(n));
        int first = t.measure_z(q, meas);
        EXPECT_TRUE(t.is_deterministic_z(q));
        EXPECT_EQ(t.expectation_z(q), first ? -1 : 1);
        EXPECT_EQ(t.measure_z(q, meas), first);
    }
}

TEST(TableauProperty, TwoQubitCliffordImageMatchesDecomposition) {
    Rng gen(4);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 4;
        StabilizerTableau base(n);
        Rng prep(100 + trial);
        run_ops(base, testing::random_clifford_ops(n, 20, prep), prep);
        uint32_t a = uint32_t(gen.below(n));
        uint32_t b = uint32_t((a + 1 + gen.below(n - 1)) % n);
        GateOp op = gen_2q_clifford(gen, a, b);
        StabilizerTableau via_image = base, via_gates = base;
        via_image.apply(op);
        const uint32_t map[2] = {a, b};
        for (const auto &g : op.clifford().decomposition) {
            via_gates.apply(GateOp::from_elementary(g, map));
        }
        EXPECT_EQ(via_image, via_gates);
    }
}

TEST(CliffordSampling, SynthesisReproducesTableau) {
    Rng rng(31);
    for (size_t n = 1; n <= 9; n++) {
        for (int trial = 0; trial < 6; trial++) {
            StabilizerTableau target = random_clifford_tableau(n, rng);
            ASSERT_NO_THROW(target.check_invariants());
            StabilizerTableau built(n);
            std::vector<uint32_t> map(n);
            for (uint32_t q = 0; q < n; q++) {
                map[q] = q;
            }
            for (const auto &g : synthesize_clifford(target)) {
                built.apply(GateOp::from_elementary(g, map));
            }
            EXPECT_EQ(built, target) << "n=" << n;
        }
    }
}

TEST(CliffordSampling, SameSeedSameClifford) {
    Rng a(8), b(8);
    EXPECT_EQ(random_clifford_tableau(6, a), random_clifford_tableau(6, b));
}

// Key of the symplectic part (signs dropped) of a two-qubit tableau.
uint32_t symplectic_key(const StabilizerTableau &t) {
    uint32_t key = 0;
    for (size_t r = 0; r < 4; r++) {
        for (size_t q = 0; q < 2; q++) {
            key = key << 2 | uint32_t(t.x(r, q)) << 1 | uint32_t(t.z(r, q));
        }
    }
    return key;
}

uint32_t sign_key(const StabilizerTableau &t) {
    uint32_t key = 0;
    for (size_t r = 0; r < 4; r++) {
        key = key << 1 | uint32_t(t.sign(r));
    }
    return key;
}

// 720 symplectic classes (|Sp(4,2)|) x 16 Pauli sign patterns = 11520.
template <class Draw>
void expect_uniform_two_qubit(Draw draw, uint64_t seed) {
    Rng rng(seed);
    const int draws = 100000;
    std::map<uint32_t, int> classes;
    std::map<uint32_t, int> signs;
    for (int i = 0; i < draws; i++) {
        StabilizerTableau t = draw(rng);
        classes[symplectic_key(t)]++;
        signs[sign_key(t)]++;
    }
    ASSERT_EQ(classes.size(), 720u);
    ASSERT_EQ(signs.size(), 16u);
    auto p_value = [&](const std::map<uint32_t, int> &counts) {
        double expected = double(draws) / double(counts.size());
        double chi2 = 0;
        for (const auto &[key, c] : counts) {
            chi2 += (c - expected) * (c - expected) / expected;
        }
        boost::math::chi_squared dist(double(counts.size() - 1));
        return boost::math::cdf(boost::math::complement(dist, chi2));
    };
    EXPECT_GT(p_value(classes), 0.01);
    EXPECT_GT(p_value(signs), 0.01);
}

TEST(CliffordSampling, TwoQubitTableauIsUniform) {
    expect_uniform_two_qubit([](Rng &rng) { return random_clifford_tableau(2, rng); }, 555);
}

TEST(CliffordSampling, TwoQubitGateIsUniform) {
    expect_uniform_two_qubit(
        [](Rng &rng) {
            StabilizerTableau t(2);
            t.apply(gen_2q_clifford(rng, 0, 1));
            return t;
        },
        556);
}

}  // namespace
}  // namespace qfluct
