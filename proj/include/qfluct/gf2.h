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

#ifndef QFLUCT_GF2_H
#define QFLUCT_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qfluct {

inline size_t words_for_bits(size_t bits) {
    return (bits + 63) / 64;
}

/// Dense GF(2) matrix with rows packed into 64-bit words.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), words_(rows * stride_, 0) {
    }

    static BitMatrix identity(size_t n) {
        BitMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m.set(i, i, true);
        }
        return m;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return (words_[r * stride_ + c / 64] >> (c % 64)) & 1;
    }
    void set(size_t r, size_t c, bool v) {
        uint64_t &w = words_[r * stride_ + c / 64];
        uint64_t bit = uint64_t{1} << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }

    std::span<uint64_t> row(size_t r) {
        return {words_.data() + r * stride_, stride_};
    }
    std::span<const uint64_t> row(size_t r) const {
        return {words_.data() + r * stride_, stride_};
    }

    /// row(dst) ^= row(src)
    void xor_row(size_t dst, size_t src) {
        uint64_t *d = words_.data() + dst * stride_;
        const uint64_t *s = words_.data() + src * stride_;
        for (size_t k = 0; k < stride_; k++) {
            d[k] ^= s[k];
        }
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) {
            return;
        }
        for (size_t k = 0; k < stride_; k++) {
            std::swap(words_[a * stride_ + k], words_[b * stride_ + k]);
        }
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                if (get(r, c)) {
                    t.set(c, r, true);
                }
            }
        }
        return t;
    }

    BitMatrix operator*(const BitMatrix &rhs) const {
        BitMatrix out(rows_, rhs.cols_);
        for (size_t r = 0; r < rows_; r++) {
            uint64_t *o = out.words_.data() + r * out.stride_;
            for (size_t k = 0; k < cols_; k++) {
                if (get(r, k)) {
                    const uint64_t *s = rhs.words_.data() + k * rhs.stride_;
                    for (size_t w = 0; w < out.stride_; w++) {
                        o[w] ^= s[w];
                    }
                }
            }
        }
        return out;
    }

    bool operator==(const BitMatrix &other) const = default;

    /// Rank by word-wise Gaussian elimination. Destroys the contents.
    size_t eliminate_rank() {
        size_t rank = 0;
        for (size_t c = 0; c < cols_ && rank < rows_; c++) {
            size_t word = c / 64;
            uint64_t bit = uint64_t{1} << (c % 64);
            size_t pivot = rank;
            while (pivot < rows_ && !(words_[pivot * stride_ + word] & bit)) {
                pivot++;
            }
            if (pivot == rows_) {
                continue;
            }
            swap_rows(rank, pivot);
            for (size_t r = rank + 1; r < rows_; r++) {
                if (words_[r * stride_ + word] & bit) {
                    xor_row(r, rank);
                }
            }
            rank++;
        }
        return rank;
    }

    size_t rank() const {
        BitMatrix copy = *this;
        return copy.eliminate_rank();
    }

    /// Inverse of a square matrix; returns false when singular.
    bool invert(BitMatrix &out) const {
        size_t n = rows_;
        BitMatrix a = *this;
        out = identity(n);
        for (size_t c = 0; c < n; c++) {
            size_t pivot = c;
            while (pivot < n && !a.get(pivot, c)) {
                pivot++;
            }
            if (pivot == n) {
                return false;
            }
            a.swap_rows(c, pivot);
            out.swap_rows(c, pivot);
            for (size_t r = 0; r < n; r++) {
                if (r != c && a.get(r, c)) {
                    a.xor_row(r, c);
                    out.xor_row(r, c);
                }
            }
        }
        return true;
    }

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace qfluct

#endif
