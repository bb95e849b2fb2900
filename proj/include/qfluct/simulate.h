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

#ifndef QFLUCT_SIMULATE_H
#define QFLUCT_SIMULATE_H

#include <span>

#include "qfluct/circuit.h"
#include "qfluct/rng.h"

namespace qfluct {

/// Runs an op stream on either backend; measurement draws come from `measurements`.
template <class Backend>
void run_ops(Backend &backend, std::span<const GateOp> ops, Rng &measurements) {
    for (const auto &op : ops) {
        if (op.kind() == GateKind::MeasureZ) {
            backend.measure_z(op.qubit(0), measurements);
        } else {
            backend.apply(op);
        }
    }
}

}  // namespace qfluct

#endif
