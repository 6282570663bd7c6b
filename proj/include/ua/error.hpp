/*
 *   Copyright 2026 The ua Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ua {

using Element = std::size_t;

/// Sorted, duplicate-free list of carrier elements.
using ElementSet = std::vector<Element>;

enum class Errc {
  SyntaxError,
  UnknownSymbol,
  ArityMismatch,
  MissingAssignment,
  SignatureMismatch,
  SizeMismatch,
  SizeLimitExceeded,
  NotACongruence,
  NotASubalgebra,
  NotAHomomorphism,
  NotIdempotent,
  PointednessViolation,
  IdentityFailure,
  ShapeMismatch,
  SectionViolation,
  EndpointMismatch,
  NotAutomorphism,
  NotAnAction,
  NotNormal,
  NotSubgroup,
  ConditionViolation,
  CompatibilityViolation,
  NotSubdigroup,
  NotIdeal,
  HypothesisViolation,
  AxiomFailure,
  DecompositionInvalid,
  NotASubheap,
  EmptySet,
  ParseError,
  DuplicateName,
  TableRangeError,
  UnknownVerb,
  // Two routes that must agree disagreed; indicates a bug, never bad input.
  Inconsistent,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::MissingAssignment: return "MissingAssignment";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::NotACongruence: return "NotACongruence";
    case Errc::NotASubalgebra: return "NotASubalgebra";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::PointednessViolation: return "PointednessViolation";
    case Errc::IdentityFailure: return "IdentityFailure";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SectionViolation: return "SectionViolation";
    case Errc::EndpointMismatch: return "EndpointMismatch";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::ConditionViolation: return "ConditionViolation";
    case Errc::CompatibilityViolation: return "CompatibilityViolation";
    case Errc::NotSubdigroup: return "NotSubdigroup";
    case Errc::NotIdeal: return "NotIdeal";
    case Errc::HypothesisViolation: return "HypothesisViolation";
    case Errc::AxiomFailure: return "AxiomFailure";
    case Errc::DecompositionInvalid: return "DecompositionInvalid";
    case Errc::NotASubheap: return "NotASubheap";
    case Errc::EmptySet: return "EmptySet";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::TableRangeError: return "TableRangeError";
    case Errc::UnknownVerb: return "UnknownVerb";
    case Errc::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

/// The single exception type of the library. `code()` classifies the
/// failure; `witness()` carries the offending tuple when one exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Error(Errc code, const std::string& what, std::vector<Element> witness)
      : Error(code, what) {
    witness_ = std::move(witness);
  }

  Errc code() const noexcept { return code_; }

  const std::optional<std::vector<Element>>& witness() const noexcept {
    return witness_;
  }

  /// Byte offset for SyntaxError, line number for ParseError.
  std::optional<std::size_t> position() const noexcept { return position_; }

  Error&& at(std::size_t position) && {
    position_ = position;
    return std::move(*this);
  }

 private:
  Errc code_;
  std::optional<std::vector<Element>> witness_;
  std::optional<std::size_t> position_;
};

inline std::string tuple_string(const std::vector<Element>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(tuple[i]);
  }
  return out + ")";
}

/// Throws Errc::Inconsistent when two independently computed answers differ.
inline void require_agreement(bool agree, const std::string& what) {
  if (!agree) throw Error(Errc::Inconsistent, what);
}

}  // namespace ua
