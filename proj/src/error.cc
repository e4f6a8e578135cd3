// Copyright 2026 The latwit Authors
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

#include "latwit/error.h"

namespace latwit {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BadWeights: return "BadWeights";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotOrthonormal: return "NotOrthonormal";
        case ErrorCode::OddDim: return "OddDim";
        case ErrorCode::NonPositiveMu: return "NonPositiveMu";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::NotPpt: return "NotPpt";
        case ErrorCode::ZeroKernels: return "ZeroKernels";
        case ErrorCode::PointNotInSubset: return "PointNotInSubset";
        case ErrorCode::NonSquareParties: return "NonSquareParties";
        case ErrorCode::BadCovering: return "BadCovering";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

}  // namespace latwit
