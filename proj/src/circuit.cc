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

#include "qfluct/circuit.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qfluct/error.h"
#include "qfluct/pauli.h"

namespace qfluct {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 13> kGateNames{{
    {GateKind::I, "I"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::T, "T"},
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::Clifford2, "C2"},
    {GateKind::MeasureZ, "M"},
}};

// Applies a 2x2 matrix to local qubit q of a 4x4 operator from the left.
void left_multiply_single(std::array<cdouble, 16> &u, const std::array<cdouble, 4> &g, uint32_t q) {
    std::array<cdouble, 16> out{};
    uint32_t bit = 1u << q;
    for (uint32_t row = 0; row < 4; row++) {
        uint32_t r0 = row & ~bit;
        uint32_t r1 = row | bit;
        uint32_t rb = (row >> q) & 1;
        for (uint32_t col = 0; col < 4; col++) {
            out[row * 4 + col] = g[rb * 2 + 0] * u[r0 * 4 + col] + g[rb * 2 + 1] * u[r1 * 4 + col];
        }
    }
    u = out;
}

void left_multiply_cnot(std::array<cdouble, 16> &u, uint32_t control, uint32_t target) {
    std::array<cdouble, 16> out{};
    for (uint32_t row = 0; row < 4; row++) {
        uint32_t src = ((row >> control) & 1) ? (row ^ (1u << target)) : row;
        for (uint32_t col = 0; col < 4; col++) {
            out[row * 4 + col] = u[src * 4 + col];
        }
    }
    u = out;
}

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

[[noreturn]] void parse_fail(size_t line_no, const std::string &msg) {
    throw Error(ErrorKind::InvalidConfig, "circuit text line " + std::to_string(line_no) + ": " + msg);
}

uint32_t parse_u32(std::string_view tok, size_t line_no) {
    uint32_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
        parse_fail(line_no, "bad integer '" + std::string(tok) + "'");
    }
    return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            j++;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_char(std::string_view s, char c) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); i++) {
        if (i == s.size() || s[i] == c) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &[k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (const auto &[k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool is_clifford_kind(GateKind kind) {
    switch (kind) {
        case GateKind::I:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::S:
        case GateKind::CNOT:
        case GateKind::Clifford2:
            return true;
        default:
            return false;
    }
}

bool is_rotation_kind(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

std::array<cdouble, 4> single_qubit_matrix(GateKind kind, double angle) {
    using namespace std::complex_literals;
    const double r = 1 / std::numbers::sqrt2;
    switch (kind) {
        case GateKind::I:
            return {1, 0, 0, 1};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::Y:
            return {0, -1i, 1i, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::S:
            return {1, 0, 0, 1i};
        case GateKind::T:
            return {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
        case GateKind::RX: {
            double c = std::cos(angle / 2), s = std::sin(angle / 2);
            return {c, -1i * s, -1i * s, c};
        }
        case GateKind::RY: {
            double c = std::cos(angle / 2), s = std::sin(angle / 2);
            return {c, -s, s, c};
        }
        case GateKind::RZ:
            return {std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2)};
        default:
            throw Error(ErrorKind::InvalidGate, std::string(gate_name(kind)) + " is not a single-qubit unitary");
    }
}

TwoQubitClifford TwoQubitClifford::from_decomposition(std::vector<ElementaryGate> gates) {
    TwoQubitClifford c;
    c.matrix = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
    for (const auto &g : gates) {
        if (g.q0 > 1 || (g.kind == GateKind::CNOT && (g.q1 > 1 || g.q1 == g.q0))) {
            throw Error(ErrorKind::InvalidGate, "two-qubit decomposition uses qubits outside {0,1}");
        }
        if (g.kind == GateKind::CNOT) {
            left_multiply_cnot(c.matrix, g.q0, g.q1);
        } else if (is_clifford_kind(g.kind) && g.kind != GateKind::Clifford2) {
            left_multiply_single(c.matrix, single_qubit_matrix(g.kind), g.q0);
        } else {
            throw Error(ErrorKind::InvalidGate, "decomposition gate must be an elementary Clifford");
        }
    }
    for (uint32_t code = 0; code < 16; code++) {
        bool x[2] = {bool(code & 1), bool(code & 4)};
        bool z[2] = {bool(code & 2), bool(code & 8)};
        bool sign = false;
        for (const auto &g : gates) {
            uint32_t a = g.q0;
            switch (g.kind) {
                case GateKind::H:
                    pauli::h(x[a], z[a], sign);
                    break;
                case GateKind::S:
                    pauli::s(x[a], z[a], sign);
                    break;
                case GateKind::X:
                    pauli::x(x[a], z[a], sign);
                    break;
                case GateKind::Y:
                    pauli::y(x[a], z[a], sign);
                    break;
                case GateKind::Z:
                    pauli::z(x[a], z[a], sign);
                    break;
                case GateKind::CNOT:
                    pauli::cnot(x[a], z[a], x[g.q1], z[g.q1], sign);
                    break;
                default:
                    break;
            }
        }
        c.pauli_image[code] =
            uint8_t(x[0] | (z[0] << 1) | (x[1] << 2) | (z[1] << 3) | (uint8_t(sign) << 4));
    }
    c.decomposition = std::move(gates);
    return c;
}

GateOp GateOp::single(GateKind kind, uint32_t q) {
    if (kind == GateKind::CNOT || kind == GateKind::Clifford2 || is_rotation_kind(kind)) {
        throw Error(ErrorKind::InvalidGate, std::string(gate_name(kind)) + " is not a parameter-free single-qubit gate");
    }
    GateOp op;
    op.kind_ = kind;
    op.qubits_ = {q, q};
    return op;
}

GateOp GateOp::cnot(uint32_t control, uint32_t target) {
    GateOp op;
    op.kind_ = GateKind::CNOT;
    op.arity_ = 2;
    op.qubits_ = {control, target};
    return op;
}

GateOp GateOp::rotation(GateKind kind, uint32_t q, double angle) {
    if (!is_rotation_kind(kind)) {
        throw Error(ErrorKind::InvalidGate, std::string(gate_name(kind)) + " is not a rotation");
    }
    GateOp op;
    op.kind_ = kind;
    op.qubits_ = {q, q};
    op.angle_ = angle;
    return op;
}

GateOp GateOp::measure(uint32_t q) {
    GateOp op;
    op.kind_ = GateKind::MeasureZ;
    op.qubits_ = {q, q};
    return op;
}

GateOp GateOp::clifford2(uint32_t a, uint32_t b, std::shared_ptr<const TwoQubitClifford> payload) {
    GateOp op;
    op.kind_ = GateKind::Clifford2;
    op.arity_ = 2;
    op.qubits_ = {a, b};
    op.clifford_ = std::move(payload);
    return op;
}

GateOp GateOp::from_elementary(const ElementaryGate &g, std::span<const uint32_t> qubit_map) {
    if (g.kind == GateKind::CNOT) {
        return cnot(qubit_map[g.q0], qubit_map[g.q1]);
    }
    return single(g.kind, qubit_map[g.q0]);
}

void GateOp::validate(size_t n) const {
    for (size_t i = 0; i < arity_; i++) {
        if (qubits_[i] >= n) {
            throw Error(ErrorKind::InvalidGate, std::string(gate_name(kind_)) + " on qubit " +
                                                    std::to_string(qubits_[i]) + " of an " + std::to_string(n) +
                                                    "-qubit register");
        }
    }
    if (arity_ == 2 && qubits_[0] == qubits_[1]) {
        throw Error(ErrorKind::InvalidGate, std::string(gate_name(kind_)) + " with repeated qubit");
    }
    if (!std::isfinite(angle_)) {
        throw Error(ErrorKind::InvalidGate, "non-finite rotation angle");
    }
    if (kind_ == GateKind::Clifford2 && !clifford_) {
        throw Error(ErrorKind::InvalidGate, "two-qubit Clifford without payload");
    }
}

bool GateOp::operator==(const GateOp &other) const {
    if (kind_ != other.kind_ || arity_ != other.arity_ || qubits_[0] != other.qubits_[0] ||
        (arity_ == 2 && qubits_[1] != other.qubits_[1]) || angle_ != other.angle_) {
        return false;
    }
    if (kind_ == GateKind::Clifford2) {
        return clifford_->decomposition == other.clifford_->decomposition;
    }
    return true;
}

size_t Circuit::count(GateKind kind) const {
    size_t c = 0;
    for (const auto &op : ops) {
        c += op.kind() == kind;
    }
    return c;
}

void Circuit::validate() const {
    for (const auto &op : ops) {
        op.validate(n);
    }
    if (meta.n_t >= 0 && count(GateKind::T) != size_t(meta.n_t)) {
        throw Error(ErrorKind::InvalidConfig, "T-gate count does not match circuit metadata");
    }
}

std::string circuit_to_text(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.n << "\n";
    out << "seed " << circuit.seed << "\n";
    if (!circuit.meta.ensemble.empty()) {
        out << "meta " << circuit.meta.ensemble << " n_t=" << circuit.meta.n_t
            << " theta=" << format_angle(circuit.meta.theta) << " p_m=" << format_angle(circuit.meta.p_m)
            << " cycles=" << circuit.meta.n_cycles << "\n";
    }
    for (const auto &op : circuit.ops) {
        out << gate_name(op.kind()) << ' ' << op.qubit(0);
        if (op.arity() == 2) {
            out << ' ' << op.qubit(1);
        }
        if (is_rotation_kind(op.kind())) {
            out << ' ' << format_angle(op.angle());
        }
        if (op.kind() == GateKind::Clifford2) {
            for (const auto &g : op.clifford().decomposition) {
                out << ' ' << gate_name(g.kind) << ':' << g.q0;
                if (g.kind == GateKind::CNOT) {
                    out << ':' << g.q1;
                }
            }
        }
        out << '\n';
    }
    return out.str();
}

Circuit circuit_from_text(std::string_view text) {
    Circuit c;
    size_t line_no = 0;
    for (std::string_view line : split_char(text, '\n')) {
        line_no++;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0].starts_with('#')) {
            continue;
        }
        if (tok[0] == "qubits") {
            if (tok.size() != 2) {
                parse_fail(line_no, "expected 'qubits N'");
            }
            c.n = parse_u32(tok[1], line_no);
            continue;
        }
        if (tok[0] == "seed") {
            if (tok.size() != 2) {
                parse_fail(line_no, "expected 'seed S'");
            }
            std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), c.seed);
            continue;
        }
        if (tok[0] == "meta") {
            if (tok.size() < 2) {
                parse_fail(line_no, "expected 'meta <ensemble> ...'");
            }
            c.meta.ensemble = std::string(tok[1]);
            for (size_t i = 2; i < tok.size(); i++) {
                auto kv = split_char(tok[i], '=');
                if (kv.size() != 2) {
                    parse_fail(line_no, "bad meta field");
                }
                std::string v(kv[1]);
                if (kv[0] == "n_t") {
                    c.meta.n_t = std::stoi(v);
                } else if (kv[0] == "theta") {
                    c.meta.theta = std::stod(v);
                } else if (kv[0] == "p_m") {
                    c.meta.p_m = std::stod(v);
                } else if (kv[0] == "cycles") {
                    c.meta.n_cycles = std::stoi(v);
                }
            }
            continue;
        }
        auto kind = gate_from_name(tok[0]);
        if (!kind) {
            parse_fail(line_no, "unknown gate '" + std::string(tok[0]) + "'");
        }
        auto need = [&](size_t k) {
            if (tok.size() < k) {
                parse_fail(line_no, "too few fields");
            }
        };
        need(2);
        uint32_t q0 = parse_u32(tok[1], line_no);
        if (*kind == GateKind::CNOT) {
            need(3);
            c.ops.push_back(GateOp::cnot(q0, parse_u32(tok[2], line_no)));
        } else if (is_rotation_kind(*kind)) {
            need(3);
            c.ops.push_back(GateOp::rotation(*kind, q0, std::stod(std::string(tok[2]))));
        } else if (*kind == GateKind::MeasureZ) {
            c.ops.push_back(GateOp::measure(q0));
        } else if (*kind == GateKind::Clifford2) {
            need(3);
            uint32_t q1 = parse_u32(tok[2], line_no);
            std::vector<ElementaryGate> gates;
            for (size_t i = 3; i < tok.size(); i++) {
                auto parts = split_char(tok[i], ':');
                auto gk = gate_from_name(parts[0]);
                if (!gk || parts.size() < 2) {
                    parse_fail(line_no, "bad decomposition token '" + std::string(tok[i]) + "'");
                }
                ElementaryGate g{*gk, parse_u32(parts[1], line_no)};
                if (*gk == GateKind::CNOT) {
                    if (parts.size() != 3) {
                        parse_fail(line_no, "CNOT token needs two qubits");
                    }
                    g.q1 = parse_u32(parts[2], line_no);
                }
                gates.push_back(g);
            }
            c.ops.push_back(GateOp::clifford2(
                q0, q1, std::make_shared<const TwoQubitClifford>(TwoQubitClifford::from_decomposition(std::move(gates)))));
        } else {
            c.ops.push_back(GateOp::single(*kind, q0));
        }
    }
    c.validate();
    return c;
}

}  // namespace qfluct
