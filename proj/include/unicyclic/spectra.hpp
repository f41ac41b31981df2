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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "unicyclic/error.hpp"
#include "unicyclic/exact_linalg.hpp"
#include "unicyclic/graph.hpp"

namespace unicyclic {

/// L(G) = D(G) - A(G), exact integers.
using LaplacianMatrix = IntMatrix;

inline LaplacianMatrix laplacian(const Graph& g) {
  LaplacianMatrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    l(v, v) = static_cast<std::int64_t>(g.degree(v));
    for (Vertex w : g.neighbors(v)) l(v, w) = -1;
  }
  return l;
}

struct IntervalCount {
  Rational a;
  Rational b;
  std::size_t count = 0;
};

/// Number of Laplacian eigenvalues in the half-open interval [a, b):
///   #{mu < b} - #{mu < a} = neg(L - bI) - neg(L - aI).
inline IntervalCount count_interval(const Graph& g, const Rational& a,
                                    const Rational& b) {
  if (a >= b)
    throw Error(ErrorKind::InvalidInterval,
                "[" + a.get_str() + ", " + b.get_str() + ") is empty");
  const auto l = laplacian(g);
  const auto below_b = inertia(shifted(l, b)).negatives;
  const auto below_a = inertia(shifted(l, a)).negatives;
  return {a, b, below_b - below_a};
}

/// m_G[0,1).
inline std::size_t count_below_one(const Graph& g) {
  return count_interval(g, 0, 1).count;
}

/// m_G(mu) = nullity(L - mu I).
inline std::size_t multiplicity(const Graph& g, const Rational& mu) {
  return nullity(shifted(laplacian(g), mu));
}

/// Sorted eigenvalues, smallest first.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

enum class Family { Path, Cycle };

/// 2 - 2cos(k pi / n) for paths and 2 - 2cos(2 pi k / n) for cycles,
/// k = 0..n-1.
inline Spectrum closed_form_spectrum(Family family, std::size_t n) {
  if (n == 0 || (family == Family::Cycle && n < 3))
    throw Error(ErrorKind::InvalidParameter,
                "closed-form spectrum needs n >= 1 (path) or n >= 3 (cycle)");
  Spectrum s;
  s.values.reserve(n);
  const double step = family == Family::Path ? std::numbers::pi / n
                                             : 2 * std::numbers::pi / n;
  for (std::size_t k = 0; k < n; ++k)
    s.values.push_back(2.0 - 2.0 * std::cos(step * static_cast<double>(k)));
  std::sort(s.values.begin(), s.values.end());
  return s;
}

/// Cyclic Jacobi eigenvalues of a real symmetric matrix, iterated until the
/// off-diagonal Frobenius norm drops below tol.
inline Spectrum jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                   double tol, int max_sweeps = 100) {
  if (!(tol > 0))
    throw Error(ErrorKind::InvalidParameter, "tolerance must be positive");
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return a[i * n + j];
  };
  auto off_norm = [&] {
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) sum += at(i, j) * at(i, j);
    return std::sqrt(sum);
  };
  int sweep = 0;
  while (off_norm() >= tol) {
    if (++sweep > max_sweeps)
      throw Error(ErrorKind::NumericFailure,
                  "Jacobi did not converge in " + std::to_string(max_sweeps) +
                      " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  Spectrum s;
  for (std::size_t i = 0; i < n; ++i) s.values.push_back(at(i, i));
  std::sort(s.values.begin(), s.values.end());
  return s;
}

/// Floating-point Laplacian spectrum; an oracle for the exact counts.
inline Spectrum spectrum_float(const Graph& g, double tol) {
  const auto l = laplacian(g);
  const std::size_t n = l.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = static_cast<double>(l(i, j));
  return jacobi_eigenvalues(std::move(a), n, tol);
}

/// mu_i(G) <= mu_{i+1}(G - e) <= mu_{i+1}(G) for i = 1..n-1, with slack.
inline bool check_interlacing(const Graph& g, Edge e, double slack = 1e-8) {
  if (!g.has_edge(e.u, e.v))
    throw Error(ErrorKind::EdgeNotPresent,
                "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  const auto full = spectrum_float(g, 1e-12);
  const auto cut = spectrum_float(g.without_edge(e), 1e-12);
  for (std::size_t i = 0; i + 1 < full.size(); ++i) {
    if (full[i] > cut[i + 1] + slack) return false;
    if (cut[i + 1] > full[i + 1] + slack) return false;
  }
  return true;
}

}  // namespace unicyclic
