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

#include "qfluct/circuits.h"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "qfluct/clifford_sampling.h"
#include "qfluct/error.h"
#include "qfluct/tableau.h"

namespace qfluct {

namespace {

constexpr GateKind kSingleCliffords[] = {GateKind::I, GateKind::X, GateKind::Y,
                                         GateKind::Z, GateKind::H, GateKind::S};

std::pair<uint32_t, uint32_t> ordered_pair(size_t n, Rng &rng) {
    uint32_t c = uint32_t(rng.below(n));
    uint32_t t = uint32_t(rng.below(n - 1));
    if (t >= c) {
        t++;
    }
    return {c, t};
}

void append_local_block(size_t n, CnotPairing pairing, Rng &rng, std::vector<GateOp> &ops) {
    for (size_t step = 0; step < 2 * n; step++) {
        GateKind kind = kSingleCliffords[rng.below(6)];
        uint32_t q = uint32_t(rng.below(n));
        ops.push_back(GateOp::single(kind, q));
        if (pairing == CnotPairing::FixedPair) {
            auto [c, t] = ordered_pair(n, rng);
            for (int k = 0; k < 3; k++) {
                ops.push_back(GateOp::cnot(c, t));
            }
        } else {
            for (int k = 0; k < 3; k++) {
                auto [c, t] = ordered_pair(n, rng);
                ops.push_back(GateOp::cnot(c, t));
            }
        }
    }
}

void append_global_clifford(size_t n, Rng &rng, std::vector<GateOp> &ops) {
    std::vector<uint32_t> identity_map(n);
    for (uint32_t q = 0; q < n; q++) {
        identity_map[q] = q;
    }
    for (const auto &g : random_clifford_gates(n, rng)) {
        ops.push_back(GateOp::from_elementary(g, identity_map));
    }
}

void append_layer(size_t n, bool odd, double theta, double p_m, Rng &rng, std::vector<GateOp> &out) {
    for (size_t a = odd ? 1 : 0; a < n; a += 2) {
        uint32_t b = uint32_t((a + 1) % n);
        out.push_back(gen_2q_clifford(rng, uint32_t(a), b));
    }
    if (theta != 0) {
        for (uint32_t q = 0; q < n; q++) {
            static constexpr GateKind axes[] = {GateKind::RX, GateKind::RY, GateKind::RZ};
            out.push_back(GateOp::rotation(axes[rng.below(3)], q, theta));
        }
    }
    for (uint32_t q = 0; q < n; q++) {
        if (rng.uniform() < p_m) {
            out.push_back(GateOp::measure(q));
        }
    }
}

}  // namespace

Circuit gen_tdoped(size_t n, int n_t, Rng &rng, const TdopedOptions &options) {
    if (n < 4 || n % 4 != 0) {
        throw Error(ErrorKind::InvalidConfig, "t-doped circuits need n >= 4 divisible by 4, got " + std::to_string(n));
    }
    if (n_t < 0) {
        throw Error(ErrorKind::InvalidConfig, "negative T count");
    }
    Circuit c;
    c.n = n;
    c.meta.n_t = n_t;
    auto block = [&] {
        if (options.block == CliffordBlockKind::UniformGlobal) {
            append_global_clifford(n, rng, c.ops);
        } else {
            append_local_block(n, options.pairing, rng, c.ops);
        }
    };
    auto t_gate = [&] { c.ops.push_back(GateOp::single(GateKind::T, uint32_t(rng.below(n)))); };

    if (options.block == CliffordBlockKind::UniformGlobal) {
        c.meta.ensemble = "tdoped-clifford";
        block();
        for (int k = 0; k < n_t; k++) {
            t_gate();
            block();
        }
    } else {
        c.meta.ensemble = "tdoped";
        if (n_t == 0) {
            block();
        }
        for (int k = 0; k < n_t; k++) {
            block();
            t_gate();
        }
    }
    return c;
}

namespace {

// Tableau of a two-qubit Clifford packed as 16 symplectic bits and 4 signs.
uint32_t two_qubit_key(const StabilizerTableau &t) {
    uint32_t key = 0;
    for (size_t r = 0; r < 4; r++) {
        key = key << 5 | uint32_t(t.x(r, 0)) << 4 | uint32_t(t.z(r, 0)) << 3 | uint32_t(t.x(r, 1)) << 2 |
              uint32_t(t.z(r, 1)) << 1 | uint32_t(t.sign(r));
    }
    return key;
}

// All 11520 two-qubit Cliffords, each with a shortest decomposition over
// {H, S, CNOT, X, Z}, found by breadth-first search from the identity.
class TwoQubitCliffordTable {
   public:
    static const TwoQubitCliffordTable &instance() {
        static const TwoQubitCliffordTable table;
        return table;
    }

    std::shared_ptr<const TwoQubitClifford> lookup(const StabilizerTableau &t) const {
        return entries_.at(two_qubit_key(t));
    }

    size_t size() const {
        return entries_.size();
    }

   private:
    TwoQubitCliffordTable() {
        const ElementaryGate generators[] = {
            {GateKind::H, 0},       {GateKind::H, 1},       {GateKind::S, 0}, {GateKind::S, 1}, {GateKind::CNOT, 0, 1},
            {GateKind::CNOT, 1, 0}, {GateKind::X, 0},       {GateKind::X, 1}, {GateKind::Z, 0}, {GateKind::Z, 1},
        };
        const uint32_t map[2] = {0, 1};
        struct Node {
            StabilizerTableau tableau;
            std::vector<ElementaryGate> gates;
        };
        std::unordered_map<uint32_t, bool> seen;
        std::deque<Node> queue;
        StabilizerTableau start(2);
        seen[two_qubit_key(start)] = true;
        queue.push_back({start, {}});
        while (!queue.empty()) {
            Node node = std::move(queue.front());
            queue.pop_front();
            uint32_t key = two_qubit_key(node.tableau);
            entries_[key] = std::make_shared<const TwoQubitClifford>(TwoQubitClifford::from_decomposition(node.gates));
            for (const auto &g : generators) {
                StabilizerTableau next = node.tableau;
                next.apply(GateOp::from_elementary(g, map));
                uint32_t next_key = two_qubit_key(next);
                if (seen.emplace(next_key, true).second) {
                    auto gates = node.gates;
                    gates.push_back(g);
                    queue.push_back({std::move(next), std::move(gates)});
                }
            }
        }
        if (entries_.size() != 11520) {
            throw std::logic_error("two-qubit Clifford enumeration is incomplete");
        }
    }

    std::unordered_map<uint32_t, std::shared_ptr<const TwoQubitClifford>> entries_;
};

}  // namespace

std::shared_ptr<const TwoQubitClifford> random_two_qubit_clifford(Rng &rng) {
    return TwoQubitCliffordTable::instance().lookup(random_clifford_tableau(2, rng));
}

GateOp gen_2q_clifford(Rng &rng, uint32_t a, uint32_t b) {
    return GateOp::clifford2(a, b, random_two_qubit_clifford(rng));
}

void gen_mipt_cycle(size_t n, double theta, double p_m, Rng &rng, std::vector<GateOp> &out) {
    if (n < 4 || n % 2 != 0) {
        throw Error(ErrorKind::InvalidConfig, "monitored brickwork needs even n >= 4, got " + std::to_string(n));
    }
    if (!(p_m >= 0 && p_m <= 1) || !std::isfinite(theta)) {
        throw Error(ErrorKind::InvalidConfig, "p_m must lie in [0,1] and theta must be finite");
    }
    append_layer(n, false, theta, p_m, rng, out);
    append_layer(n, true, theta, p_m, rng, out);
}

std::vector<GateOp> gen_mipt_cycle(size_t n, double theta, double p_m, Rng &rng) {
    std::vector<GateOp> out;
    gen_mipt_cycle(n, theta, p_m, rng, out);
    return out;
}

}  // namespace qfluct
