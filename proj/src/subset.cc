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

#include "qfluct/subset.h"

#include <algorithm>

#include "qfluct/error.h"

namespace qfluct {

QubitSubset::QubitSubset(std::initializer_list<uint32_t> indices) : QubitSubset(std::vector<uint32_t>(indices)) {
}

QubitSubset::QubitSubset(std::vector<uint32_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw Error(ErrorKind::InvalidSubset, "duplicate qubit index in subset");
    }
}

QubitSubset QubitSubset::range(uint32_t begin, uint32_t end) {
    std::vector<uint32_t> v;
    for (uint32_t q = begin; q < end; q++) {
        v.push_back(q);
    }
    return QubitSubset(std::move(v));
}

bool QubitSubset::contains(uint32_t q) const {
    return std::binary_search(indices_.begin(), indices_.end(), q);
}

uint32_t QubitSubset::max_index() const {
    return indices_.empty() ? 0 : indices_.back();
}

uint64_t QubitSubset::mask() const {
    uint64_t m = 0;
    for (uint32_t q : indices_) {
        m |= uint64_t{1} << q;
    }
    return m;
}

QubitSubset QubitSubset::complement(size_t n) const {
    std::vector<uint32_t> v;
    for (uint32_t q = 0; q < n; q++) {
        if (!contains(q)) {
            v.push_back(q);
        }
    }
    return QubitSubset(std::move(v));
}

QubitSubset QubitSubset::united(const QubitSubset &other) const {
    std::vector<uint32_t> v;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                   std::back_inserter(v));
    return QubitSubset(std::move(v));
}

bool QubitSubset::disjoint(const QubitSubset &other) const {
    for (uint32_t q : indices_) {
        if (other.contains(q)) {
            return false;
        }
    }
    return true;
}

void QubitSubset::validate_nonempty(size_t n) const {
    if (indices_.empty()) {
        throw Error(ErrorKind::InvalidSubset, "empty subset");
    }
    if (indices_.back() >= n) {
        throw Error(ErrorKind::InvalidSubset,
                    "subset index " + std::to_string(indices_.back()) + " out of range for " + std::to_string(n) +
                        " qubits");
    }
}

std::string QubitSubset::str() const {
    std::string s = "{";
    for (size_t i = 0; i < indices_.size(); i++) {
        s += (i ? "," : "") + std::to_string(indices_[i]);
    }
    return s + "}";
}

}  // namespace qfluct
