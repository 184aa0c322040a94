/* Copyright 2026 The fqcert Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqcert {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  DivisionByZero,
  InhomogeneousInput,
  ArityMismatch,
  IncompatibleFields,
  MixedFields,
  IndexOutOfRange,
  UnsupportedCertificate,
  PatternViolation,
  EmptyInput,
  HypothesisViolated,
  TooLarge,
  SearchSpaceTooLarge,
  InvalidArgument,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::IncompatibleFields: return "IncompatibleFields";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnsupportedCertificate: return "UnsupportedCertificate";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. The kind is stable and meant to be
/// matched on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace fqcert
