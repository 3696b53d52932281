// Copyright 2026 The skewlab Authors
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

#include "skewlab/error.hpp"

namespace skewlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ClosureViolation: return "ClosureViolation";
    case Errc::BadIdempotents: return "BadIdempotents";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotCentral: return "NotCentral";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotASubringOf: return "NotASubringOf";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotStable: return "NotStable";
    case Errc::WitnessNotInvertible: return "WitnessNotInvertible";
    case Errc::LeibnizViolation: return "LeibnizViolation";
    case Errc::IllDefined: return "IllDefined";
    case Errc::CenterNotStable: return "CenterNotStable";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotAProduct: return "NotAProduct";
    case Errc::RhoIllDefined: return "RhoIllDefined";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::OutOfCatalog: return "OutOfCatalog";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::BadLiteral: return "BadLiteral";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace skewlab
