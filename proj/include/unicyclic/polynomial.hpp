// Copyright 2026 The unicyclic Authors
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

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "unicyclic/error.hpp"
#include "unicyclic/exact_linalg.hpp"

namespace unicyclic {

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. Trailing zeros are trimmed, so the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending)
      : coeffs_(std::move(ascending)) {
    trim();
  }
  IntPolynomial(std::initializer_list<long> ascending) {
    for (long c : ascending) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial constant(const BigInt& c) { return IntPolynomial({c}); }
  static IntPolynomial x() { return IntPolynomial{0, 1}; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  BigInt coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  /// Exact p / x. A nonzero constant term means a recurrence produced a
  /// polynomial that should have had 0 as a root.
  IntPolynomial divide_by_x() const {
    if (is_zero()) return {};
    if (coeffs_.front() != 0)
      throw Error(ErrorKind::InternalConsistency,
                  "division by x is inexact for " + to_string());
    return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + 1, coeffs_.end()));
  }

  Rational eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += Rational(*it);
    }
    return acc;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
  }
  friend IntPolynomial operator*(const BigInt& k, IntPolynomial p) {
    for (auto& c : p.coeffs_) c *= k;
    p.trim();
    return p;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable, highest degree first, e.g. "x^3 - 6x^2 + 9x".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      BigInt mag = abs(c);
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      if (mag != 1 || i == 0) out += mag.get_str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline Rational eval_at(const IntPolynomial& p, const Rational& x0) {
  return p.eval(x0);
}

}  // namespace unicyclic
