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

#ifndef QFLUCT_CIRCUIT_H
#define QFLUCT_CIRCUIT_H

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qfluct {

using cdouble = std::complex<double>;

enum class GateKind : uint8_t {
    I,
    X,
    Y,
    Z,
    H,
    S,
    CNOT,
    T,
    RX,
    RY,
    RZ,
    Clifford2,
    MeasureZ,
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// True for the kinds the stabilizer backend accepts unconditionally.
bool is_clifford_kind(GateKind kind);
bool is_rotation_kind(GateKind kind);

/// A gate in a Clifford decomposition. Qubit indices are local to the
/// decomposition (0 or 1 for two-qubit Cliffords).
struct ElementaryGate {
    GateKind kind;
    uint32_t q0;
    uint32_t q1 = 0;

    bool operator==(const ElementaryGate &) const = default;
};

/// Payload of a two-qubit Clifford gate.
///
/// `matrix` is row-major over the local basis index b0 + 2*b1, where b0 is the
/// bit of the op's first qubit. `pauli_image` maps the local Pauli code
/// (x0 | z0<<1 | x1<<2 | z1<<3) to its conjugated image, with bit 4 set when
/// the image carries a minus sign.
struct TwoQubitClifford {
    std::array<cdouble, 16> matrix;
    std::vector<ElementaryGate> decomposition;
    std::array<uint8_t, 16> pauli_image;

    static TwoQubitClifford from_decomposition(std::vector<ElementaryGate> gates);
};

class GateOp {
   public:
    static GateOp single(GateKind kind, uint32_t q);
    static GateOp cnot(uint32_t control, uint32_t target);
    static GateOp rotation(GateKind kind, uint32_t q, double angle);
    static GateOp measure(uint32_t q);
    static GateOp clifford2(uint32_t a, uint32_t b, std::shared_ptr<const TwoQubitClifford> payload);
    /// Maps a decomposition gate's local qubits through `qubit_map`.
    static GateOp from_elementary(const ElementaryGate &g, std::span<const uint32_t> qubit_map);

    GateKind kind() const {
        return kind_;
    }
    uint32_t qubit(size_t i) const {
        return qubits_[i];
    }
    size_t arity() const {
        return arity_;
    }
    double angle() const {
        return angle_;
    }
    const TwoQubitClifford &clifford() const {
        return *clifford_;
    }
    bool has_clifford_payload() const {
        return clifford_ != nullptr;
    }

    /// Throws InvalidGate if indices are out of range or repeated, or the angle is not finite.
    void validate(size_t n) const;

    bool operator==(const GateOp &other) const;

   private:
    GateKind kind_ = GateKind::I;
    uint8_t arity_ = 1;
    std::array<uint32_t, 2> qubits_{0, 0};
    double angle_ = 0;
    std::shared_ptr<const TwoQubitClifford> clifford_;
};

/// 2x2 unitary of a single-qubit kind, row-major.
std::array<cdouble, 4> single_qubit_matrix(GateKind kind, double angle = 0);

/// Ensemble parameters a circuit was generated from.
struct CircuitMeta {
    std::string ensemble;  // "tdoped", "tdoped-clifford", "mipt", or empty
    int n_t = -1;
    double theta = 0;
    double p_m = 0;
    int n_cycles = 0;
};

struct Circuit {
    size_t n = 0;
    std::vector<GateOp> ops;
    CircuitMeta meta;
    uint64_t seed = 0;

    size_t count(GateKind kind) const;
    void validate() const;
};

/// Line-oriented text form: header lines `qubits N`, `seed S`, `meta ...`,
/// then one op per line (`H 3`, `CNOT 0 1`, `RZ 2 0.785...`, `M 4`,
/// `C2 0 1 H:0 CNOT:0:1 ...`). Angles are written with 17 significant digits.
std::string circuit_to_text(const Circuit &circuit);
Circuit circuit_from_text(std::string_view text);

}  // namespace qfluct

#endif
