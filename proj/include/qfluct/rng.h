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

#ifndef QFLUCT_RNG_H
#define QFLUCT_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qfluct {

/// splitmix64 finalizer.
constexpr uint64_t mix64(uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Folds a sequence of words into one seed. Order matters.
constexpr uint64_t derive_seed(std::initializer_list<uint64_t> parts) noexcept {
    uint64_t h = 0x243F6A8885A308D3ULL;
    for (uint64_t p : parts) {
        h = mix64(h ^ mix64(p));
    }
    return h;
}

/// Deterministic random stream built on mt19937_64.
///
/// All bounded draws are implemented here rather than through the standard
/// distributions, whose algorithms are implementation-defined; this keeps the
/// stream (and every circuit generated from it) identical across toolchains.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). `bound` must be non-zero.
    uint64_t below(uint64_t bound) {
        // Rejection sampling on the top of the range.
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    /// One fair bit. Bits are served from a buffered 64-bit word.
    bool bit() {
        if (bits_left_ == 0) {
            bit_buffer_ = engine_();
            bits_left_ = 64;
        }
        bool b = bit_buffer_ & 1;
        bit_buffer_ >>= 1;
        --bits_left_;
        return b;
    }

   private:
    std::mt19937_64 engine_;
    uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
};

}  // namespace qfluct

#endif
