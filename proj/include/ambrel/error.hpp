// Copyright 2026 The ambrel Authors
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

#ifndef AMBREL_ERROR_HPP_
#define AMBREL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

namespace ambrel {

/// Precondition failure of an operation (mismatched spaces, size gates,
/// malformed input). `code()` is a stable identifier such as
/// "SpaceMismatch" or "LatticeIsChain".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// The first axiom a candidate object fails, with a machine-readable witness.
struct Violation {
  std::string code;
  std::string message;
  nlohmann::json witness = nlohmann::json::object();
};

/// Outcome of a validator: either the validated value or the violation that
/// blocked it. Validators never throw for axiom failures; they report.
template <class T>
class Checked {
 public:
  Checked(T value) : state_(std::move(value)) {}             // NOLINT
  Checked(Violation violation) : state_(std::move(violation)) {}  // NOLINT

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    throw_if_invalid();
    return std::get<T>(state_);
  }
  T&& value() && {
    throw_if_invalid();
    return std::get<T>(std::move(state_));
  }

  const Violation& violation() const { return std::get<Violation>(state_); }

 private:
  void throw_if_invalid() const {
    if (!ok()) throw Error(violation().code, violation().message);
  }

  std::variant<T, Violation> state_;
};

}  // namespace ambrel

#endif  // AMBREL_ERROR_HPP_
