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

#ifndef QFLUCT_CLIFFORD_SAMPLING_H
#define QFLUCT_CLIFFORD_SAMPLING_H

#include <vector>

#include "qfluct/circuit.h"
#include "qfluct/rng.h"
#include "qfluct/tableau.h"

namespace qfluct {

/// Uniformly random n-qubit Clifford (including its Pauli part), returned as
/// the tableau of images U X_q U^dag / U Z_q U^dag.
///
/// Uses the Bravyi-Maslov canonical form F1 * H * P * F2: the Hadamard layer
/// and qubit permutation are drawn from the quantum Mallows distribution and
/// F1, F2 are uniform elements of the Hadamard-free subgroup, which makes the
/// product uniform on each Bruhat cell and hence on the whole group.
StabilizerTableau random_clifford_tableau(size_t n, Rng &rng);

/// Elementary gates (H, S, CNOT, X, Z) that map |0...0>'s tableau to `t`,
/// i.e. a circuit implementing the Clifford whose images are the rows of `t`.
std::vector<ElementaryGate> synthesize_clifford(const StabilizerTableau &t);

/// Convenience: a uniformly random Clifford as an elementary-gate circuit.
std::vector<ElementaryGate> random_clifford_gates(size_t n, Rng &rng);

}  // namespace qfluct

#endif
