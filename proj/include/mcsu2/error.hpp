// Copyright 2026 The mcsu2 Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcsu2 {

enum class ErrorCode {
  InvalidMatrix,
  SingularInput,
  DegenerateSpectrum,
  NotRealOffDiag,
  NotRealMainDiag,
  QubitOutOfRange,
  InvalidGate,
  DuplicateQubit,
  WidthMismatch,
  NotEnoughAncillas,
  TooWide,
  DimMismatch,
  InvalidWeight,
  NotNormalized,
  DuplicatePattern,
  InvalidPattern,
  InfeasibleDensity,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::NotRealOffDiag: return "NotRealOffDiag";
    case ErrorCode::NotRealMainDiag: return "NotRealMainDiag";
    case ErrorCode::QubitOutOfRange: return "QubitOutOfRange";
    case ErrorCode::InvalidGate: return "InvalidGate";
    case ErrorCode::DuplicateQubit: return "DuplicateQubit";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::NotEnoughAncillas: return "NotEnoughAncillas";
    case ErrorCode::TooWide: return "TooWide";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DuplicatePattern: return "DuplicatePattern";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::InfeasibleDensity: return "InfeasibleDensity";
  }
  return "Unknown";
}

/// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcsu2
