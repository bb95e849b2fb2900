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

#ifndef QFLUCT_SUBSET_H
#define QFLUCT_SUBSET_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qfluct {

/// Sorted set of distinct qubit indices.
///
/// Construction sorts the input and rejects duplicates; bounds are checked
/// against the qubit count of whatever state the subset is applied to.
class QubitSubset {
   public:
    QubitSubset() = default;
    QubitSubset(std::initializer_list<uint32_t> indices);
    explicit QubitSubset(std::vector<uint32_t> indices);

    /// Qubits [begin, end).
    static QubitSubset range(uint32_t begin, uint32_t end);

    std::span<const uint32_t> indices() const {
        return indices_;
    }
    size_t size() const {
        return indices_.size();
    }
    bool empty() const {
        return indices_.empty();
    }
    bool contains(uint32_t q) const;
    uint32_t max_index() const;

    /// Bit mask of the members; only valid when every index is below 64.
    uint64_t mask() const;

    QubitSubset complement(size_t n) const;
    QubitSubset united(const QubitSubset &other) const;
    bool disjoint(const QubitSubset &other) const;

    /// Throws InvalidSubset if empty or any index >= n.
    void validate_nonempty(size_t n) const;

    std::string str() const;

    bool operator==(const QubitSubset &other) const = default;

   private:
    std::vector<uint32_t> indices_;
};

}  // namespace qfluct

#endif
