// Copyright 2026 the djulia authors
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

namespace djulia {

// Every domain failure carries a stable machine-readable code so the CLI can
// emit `error: <code>: <detail>` and exit 1 (usage errors exit 2 instead).
enum class Err {
  ZeroArgument,
  ConstantArgument,
  DegeneratePolynomial,
  NotIrreducible,
  NotMonic,
  ParseError,
  PrecisionExhausted,
  NeedsExtension,
  HenselHypothesisFailed,
  NotInJuliaSet,
  BudgetExceeded,
  NotASubgroup,
  ZeroTwist,
  IncompleteComponentData,
  InvariantViolation,
  TrivialConductor,
  NotSemistable,
  NTooSmall,
  Unsupported,
  IOError,
  Overflow,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroArgument: return "ZeroArgument";
    case Err::ConstantArgument: return "ConstantArgument";
    case Err::DegeneratePolynomial: return "DegeneratePolynomial";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::NotMonic: return "NotMonic";
    case Err::ParseError: return "ParseError";
    case Err::PrecisionExhausted: return "PrecisionExhausted";
    case Err::NeedsExtension: return "NeedsExtension";
    case Err::HenselHypothesisFailed: return "HenselHypothesisFailed";
    case Err::NotInJuliaSet: return "NotInJuliaSet";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NotASubgroup: return "NotASubgroup";
    case Err::ZeroTwist: return "ZeroTwist";
    case Err::IncompleteComponentData: return "IncompleteComponentData";
    case Err::InvariantViolation: return "InvariantViolation";
    case Err::TrivialConductor: return "TrivialConductor";
    case Err::NotSemistable: return "NotSemistable";
    case Err::NTooSmall: return "NTooSmall";
    case Err::Unsupported: return "Unsupported";
    case Err::IOError: return "IOError";
    case Err::Overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace djulia
