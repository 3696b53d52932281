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

#ifndef SKEWLAB_RINGS_VALUE_HPP
#define SKEWLAB_RINGS_VALUE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "skewlab/rings/scalar.hpp"

namespace skewlab::rings {

// Deep-copying owner; lets Value hold itself recursively.
template <class T>
class Box {
 public:
  Box() : ptr_(std::make_unique<T>()) {}
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

struct Value;

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial: exponent vector -> nonzero coefficient.
struct Poly {
  std::map<Exponents, Scalar> terms;
};

/// Square matrix stored row-major.
struct Mat {
  std::size_t n = 0;
  std::vector<Value> entries;
};

struct Tuple {
  std::vector<Value> parts;
};

/// num * u^{-exp} in a localization at powers of u.
struct Frac {
  Box<Value> num;
  std::uint32_t exp = 0;
};

/// Untyped element representation; a Ring gives it meaning.
struct Value {
  std::variant<Scalar, Poly, Mat, Tuple, Frac> data;

  Value() = default;
  Value(Scalar s) : data(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Value(Poly p) : data(std::move(p)) {}    // NOLINT(google-explicit-constructor)
  Value(Mat m) : data(std::move(m)) {}     // NOLINT(google-explicit-constructor)
  Value(Tuple t) : data(std::move(t)) {}   // NOLINT(google-explicit-constructor)
  Value(Frac f) : data(std::move(f)) {}    // NOLINT(google-explicit-constructor)

  template <class T>
  const T& as() const {
    return std::get<T>(data);
  }
  template <class T>
  T& as() {
    return std::get<T>(data);
  }
  template <class T>
  bool holds() const {
    return std::holds_alternative<T>(data);
  }
};

/// Applies complex conjugation to every scalar inside v.
Value conjugate_scalars(const Value& v);

}  // namespace skewlab::rings

#endif  // SKEWLAB_RINGS_VALUE_HPP
