/*
 * Copyright 2026 The ecsum Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecsum {

enum class ErrorKind {
  kDivisionByZero,
  kFieldMismatch,
  kNonResidue,
  kUnsupportedField,
  kPrincipalCharacterForbidden,
  kInvalidField,
  kInvalidCurve,
  kCurveMismatch,
  kEndoMismatch,
  kScaleLimitExceeded,
  kInternalInconsistency,
  kInvalidResidue,
  kParameterError,
  kSampleRejected,
  kConfigError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kFieldMismatch: return "FieldMismatch";
    case ErrorKind::kNonResidue: return "NonResidue";
    case ErrorKind::kUnsupportedField: return "UnsupportedField";
    case ErrorKind::kPrincipalCharacterForbidden:
      return "PrincipalCharacterForbidden";
    case ErrorKind::kInvalidField: return "InvalidField";
    case ErrorKind::kInvalidCurve: return "InvalidCurve";
    case ErrorKind::kCurveMismatch: return "CurveMismatch";
    case ErrorKind::kEndoMismatch: return "EndoMismatch";
    case ErrorKind::kScaleLimitExceeded: return "ScaleLimitExceeded";
    case ErrorKind::kInternalInconsistency: return "InternalInconsistency";
    case ErrorKind::kInvalidResidue: return "InvalidResidue";
    case ErrorKind::kParameterError: return "ParameterError";
    case ErrorKind::kSampleRejected: return "SampleRejected";
    case ErrorKind::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

// All library failures are reported through this exception type; `kind()`
// identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by square roots of non-residues. The witness is x^((p-1)/2) mod p,
// which equals p-1 for a non-residue.
class NonResidueError : public Error {
 public:
  NonResidueError(std::uint32_t value, std::uint32_t witness)
      : Error(ErrorKind::kNonResidue,
              std::to_string(value) + " is not a square (Euler witness " +
                  std::to_string(witness) + ")"),
        value_(value),
        witness_(witness) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t witness() const noexcept { return witness_; }

 private:
  std::uint32_t value_;
  std::uint32_t witness_;
};

}  // namespace ecsum
