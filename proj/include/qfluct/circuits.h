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

#ifndef QFLUCT_CIRCUITS_H
#define QFLUCT_CIRCUITS_H

#include <memory>
#include <span>
#include <vector>

#include "qfluct/circuit.h"
#include "qfluct/rng.h"

namespace qfluct {

/// How the three CNOTs of a composite step pick their qubits.
enum class CnotPairing {
    Independent,  // each CNOT on its own uniformly drawn ordered pair
    FixedPair,    // all three on one drawn ordered pair
};

enum class CliffordBlockKind {
    /// 2n composite steps: one gate from {I,X,Y,Z,H,S} on a random qubit, then three CNOTs.
    LocalComposite,
    /// One uniformly random n-qubit Clifford.
    UniformGlobal,
};

struct TdopedOptions {
    CnotPairing pairing = CnotPairing::Independent;
    CliffordBlockKind block = CliffordBlockKind::LocalComposite;
};

/// T-doped Clifford circuit on n qubits (n >= 4, divisible by 4).
///
/// LocalComposite: ([block][T on a random qubit]) x n_t, or a single block when
/// n_t = 0. UniformGlobal: [C][T][C]...[T][C] with n_t + 1 Cliffords.
Circuit gen_tdoped(size_t n, int n_t, Rng &rng, const TdopedOptions &options = {});

/// Uniformly random two-qubit Clifford with its matrix, decomposition and
/// Pauli image table.
std::shared_ptr<const TwoQubitClifford> random_two_qubit_clifford(Rng &rng);

GateOp gen_2q_clifford(Rng &rng, uint32_t a = 0, uint32_t b = 1);

/// Appends one cycle of the monitored brickwork: even-pair Cliffords,
/// optional rotations, measurements, then odd pairs (periodic) likewise.
/// Draw order per layer: Cliffords by pair, rotation axes by ascending qubit,
/// measurement coins by ascending qubit. No rotation draws when theta == 0.
void gen_mipt_cycle(size_t n, double theta, double p_m, Rng &rng, std::vector<GateOp> &out);

std::vector<GateOp> gen_mipt_cycle(size_t n, double theta, double p_m, Rng &rng);

}  // namespace qfluct

#endif
