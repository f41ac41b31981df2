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
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "unicyclic/error.hpp"

namespace unicyclic {

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(ErrorKind::InvalidParameter, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Square dense matrix in row-major order.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : DenseMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_)
        throw Error(ErrorKind::InvalidParameter, "matrix must be square");
      std::size_t j = 0;
      for (const auto& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t order() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Principal submatrix with row/column `skip` removed.
  DenseMatrix without(std::size_t skip) const {
    DenseMatrix m(n_ - 1);
    for (std::size_t i = 0, a = 0; i < n_; ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0, b = 0; j < n_; ++j) {
        if (j == skip) continue;
        m(a, b++) = (*this)(i, j);
      }
      ++a;
    }
    return m;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<Rational>;
using IntMatrix = DenseMatrix<std::int64_t>;

/// M - shift * I over the rationals.
inline ExactMatrix shifted(const IntMatrix& m, const Rational& shift) {
  ExactMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      out(i, j) = Rational(static_cast<long>(m(i, j)));
  for (std::size_t i = 0; i < m.order(); ++i) out(i, i) -= shift;
  return out;
}

inline ExactMatrix to_exact(const IntMatrix& m) { return shifted(m, 0); }

struct Inertia {
  std::size_t negatives = 0;
  std::size_t zeros = 0;
  std::size_t positives = 0;

  std::size_t order() const noexcept { return negatives + zeros + positives; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Eigenvalue sign counts by symmetric Gaussian congruence (Sylvester).
///
/// Each step removes either a 1x1 pivot with a nonzero diagonal entry
/// (lowest off-diagonal count first, so pendant vertices of a Laplacian go
/// early) or, when every remaining diagonal entry is zero, a 2x2 block
/// [[0,a],[a,0]] with a != 0, which has one negative and one positive
/// eigenvalue. Rows that become identically zero are kernel directions.
inline Inertia inertia(ExactMatrix m) {
  if (!m.is_symmetric())
    throw Error(ErrorKind::NonSymmetric, "inertia requires a symmetric matrix");
  const std::size_t n = m.order();
  std::vector<char> active(n, 1);
  std::size_t remaining = n;
  Inertia out;

  std::vector<std::size_t> nz;  // scratch: active off-diagonal nonzeros
  auto row_support = [&](std::size_t i) {
    nz.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && active[j] && sgn(m(i, j)) != 0) nz.push_back(j);
  };

  Rational factor;
  while (remaining > 0) {
    std::size_t pivot = n, pivot_degree = n + 1;
    std::size_t pair_row = n, pair_degree = n + 1;
    bool removed_zero_row = false;
    for (std::size_t i = 0; i < n && !removed_zero_row; ++i) {
      if (!active[i]) continue;
      std::size_t degree = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && active[j] && sgn(m(i, j)) != 0) ++degree;
      if (sgn(m(i, i)) != 0) {
        if (degree < pivot_degree) {
          pivot = i;
          pivot_degree = degree;
        }
      } else if (degree == 0) {
        active[i] = 0;
        --remaining;
        ++out.zeros;
        removed_zero_row = true;
      } else if (degree < pair_degree) {
        pair_row = i;
        pair_degree = degree;
      }
    }
    if (removed_zero_row) continue;

    if (pivot < n) {
      const Rational& d = m(pivot, pivot);
      if (sgn(d) < 0) ++out.negatives;
      else ++out.positives;
      row_support(pivot);
      for (std::size_t j : nz) {
        factor = m(j, pivot) / d;
        for (std::size_t k : nz) m(j, k) -= factor * m(pivot, k);
      }
      active[pivot] = 0;
      --remaining;
      continue;
    }

    // Every active diagonal entry is zero here.
    const std::size_t p = pair_row;
    row_support(p);
    const std::size_t q = nz.front();
    const Rational a = m(p, q);
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
      if (active[j] && j != p && j != q &&
          (sgn(m(j, p)) != 0 || sgn(m(j, q)) != 0))
        others.push_back(j);
    // Schur complement of [[0,a],[a,0]]:
    //   m(j,k) -= (m(j,p) m(q,k) + m(j,q) m(p,k)) / a
    for (std::size_t j : others)
      for (std::size_t k : others)
        m(j, k) -= (m(j, p) * m(q, k) + m(j, q) * m(p, k)) / a;
    active[p] = active[q] = 0;
    remaining -= 2;
    ++out.negatives;
    ++out.positives;
  }
  return out;
}

inline std::size_t nullity(const ExactMatrix& m) { return inertia(m).zeros; }

}  // namespace unicyclic
