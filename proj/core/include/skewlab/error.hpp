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

#ifndef SKEWLAB_ERROR_HPP
#define SKEWLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewlab {

// Every failure that crosses a module boundary carries one of these codes.
enum class Errc {
  // rings
  ClosureViolation,
  BadIdempotents,
  UnsupportedKind,
  RingMismatch,
  Unsupported,
  NotCentral,
  NotRegular,
  NotASubringOf,
  FieldMismatch,
  DivisionByZero,
  // twists
  NotStable,
  WitnessNotInvertible,
  LeibnizViolation,
  IllDefined,
  CenterNotStable,
  // orepoly
  ContextMismatch,
  // centerlab
  NotAProduct,
  RhoIllDefined,
  PreconditionViolation,
  OutOfCatalog,
  BoundExceeded,
  // pilab
  ArityMismatch,
  BudgetExceeded,
  UnknownExample,
  // cli
  SyntaxError,
  UnknownKind,
  DanglingReference,
  BadLiteral,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), message_(message) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace skewlab

#endif  // SKEWLAB_ERROR_HPP
