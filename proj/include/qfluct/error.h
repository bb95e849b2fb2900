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

#ifndef QFLUCT_ERROR_H
#define QFLUCT_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfluct {

enum class ErrorKind {
    InvalidSize,
    InvalidSubset,
    UnsupportedGate,
    InvalidGate,
    InvalidConfig,
    Resource,
    NumericalState,
    InsufficientData,
    DegenerateSample,
    SingularFit,
    Io,
};

std::string_view error_kind_name(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the failure class.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidSize:
            return "invalid-size";
        case ErrorKind::InvalidSubset:
            return "invalid-subset";
        case ErrorKind::UnsupportedGate:
            return "unsupported-gate";
        case ErrorKind::InvalidGate:
            return "invalid-gate";
        case ErrorKind::InvalidConfig:
            return "invalid-config";
        case ErrorKind::Resource:
            return "resource";
        case ErrorKind::NumericalState:
            return "numerical-state";
        case ErrorKind::InsufficientData:
            return "insufficient-data";
        case ErrorKind::DegenerateSample:
            return "degenerate-sample";
        case ErrorKind::SingularFit:
            return "singular-fit";
        case ErrorKind::Io:
            return "io";
    }
    return "unknown";
}

}  // namespace qfluct

#endif
