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

#ifndef QFLUCT_PAULI_H
#define QFLUCT_PAULI_H

#include <bit>
#include <cstdint>

namespace qfluct::pauli {

// Conjugation rules for one Hermitian Pauli row (-1)^sign * prod_j P(x_j, z_j),
// with P(1,1) = Y. Each function updates the bits of the touched qubits.

inline void h(bool &x, bool &z, bool &sign) {
    sign ^= x & z;
    bool t = x;
    x = z;
    z = t;
}

inline void s(bool &x, bool &z, bool &sign) {
    sign ^= x & z;
    z ^= x;
}

inline void cnot(bool &xc, bool &zc, bool &xt, bool &zt, bool &sign) {
    sign ^= xc & zt & !(xt ^ zc);
    xt ^= xc;
    zc ^= zt;
}

inline void x(bool, bool z, bool &sign) {
    sign ^= z;
}

inline void y(bool x, bool z, bool &sign) {
    sign ^= x ^ z;
}

inline void z(bool x, bool, bool &sign) {
    sign ^= x;
}

/// Phase exponent (in units of i, mod 4) of the product of single-qubit
/// Paulis P(x1,z1) * P(x2,z2), word-parallel: returns (#plus - #minus) mod 4.
inline int product_phase(uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2) {
    uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    uint64_t minus = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
    return std::popcount(plus) - std::popcount(minus);
}

}  // namespace qfluct::pauli

#endif
