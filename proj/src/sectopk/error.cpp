// Copyright 2026 The sectopk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sectopk/error.hpp"

namespace sectopk {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::CurveTooLarge: return "CurveTooLarge";
    case ErrorCode::NegativeScalar: return "NegativeScalar";
    case ErrorCode::EncodingFailure: return "EncodingFailure";
    case ErrorCode::InfinityPoint: return "InfinityPoint";
    case ErrorCode::EmptyKey: return "EmptyKey";
    case ErrorCode::EmptyBatch: return "EmptyBatch";
    case ErrorCode::DuplicateSigner: return "DuplicateSigner";
    case ErrorCode::MissingSigner: return "MissingSigner";
    case ErrorCode::NonAsciiCharacter: return "NonAsciiCharacter";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MalformedFrame: return "MalformedFrame";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedImage: return "MalformedImage";
    case ErrorCode::InsufficientCapacity: return "InsufficientCapacity";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace sectopk
