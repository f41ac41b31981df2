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

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "unicyclic/error.hpp"
#include "unicyclic/exact_linalg.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/polynomial.hpp"
#include "unicyclic/spectra.hpp"

namespace unicyclic {

/// det(xI - M) by the division-free Samuelson-Berkowitz recursion.
inline IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.order();
  auto at = [&](std::size_t i, std::size_t j) {
    return BigInt(static_cast<long>(m(i, j)));
  };
  // Coefficients of the leading k x k block, highest degree first.
  std::vector<BigInt> poly{1};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading block [[A, c], [r, a]] with A of order k.
    std::vector<BigInt> toeplitz(k + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -at(k, k);
    std::vector<BigInt> v(k);  // A^j c
    for (std::size_t i = 0; i < k; ++i) v[i] = at(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      BigInt rv = 0;
      for (std::size_t i = 0; i < k; ++i) rv += at(k, i) * v[i];
      toeplitz[j + 2] = -rv;
      std::vector<BigInt> next(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) next[i] += at(i, l) * v[l];
      v = std::move(next);
    }
    std::vector<BigInt> grown(k + 2, 0);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j)
        grown[i] += toeplitz[i - j] * poly[j];
    poly = std::move(grown);
  }
  return IntPolynomial(std::vector<BigInt>(poly.rbegin(), poly.rend()));
}

/// Characteristic polynomial of L(G).
inline IntPolynomial characteristic_polynomial(const Graph& g) {
  return characteristic_polynomial(laplacian(g));
}

/// phi(P_0) = 0, phi(P_1) = x, phi(P_{k+1}) = (x - 2) phi(P_k) - phi(P_{k-1}).
inline IntPolynomial phi_path(std::size_t n) {
  if (n == 0) return {};
  const IntPolynomial x_minus_2{-2, 1};
  IntPolynomial prev, cur = IntPolynomial::x();
  for (std::size_t k = 1; k < n; ++k) {
    IntPolynomial next = x_minus_2 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// B_n: L(P_{n+1}) without one end vertex. H_n: L(P_{n+2}) without both ends.
enum class AuxKind { B, H };

/// x phi(B_n) = phi(P_{n+1}) + phi(P_n) and x phi(H_n) = phi(P_{n+1}).
inline IntPolynomial phi_aux(AuxKind kind, std::size_t n) {
  if (kind == AuxKind::B) return (phi_path(n + 1) + phi_path(n)).divide_by_x();
  return phi_path(n + 1).divide_by_x();
}

/// phi(C_n) = (phi(P_{n+1}) - phi(P_{n-1})) / x + 2(-1)^{n+1}.
inline IntPolynomial phi_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "cycle needs n >= 3");
  const long sign = n % 2 == 1 ? 1 : -1;
  return (phi_path(n + 1) - phi_path(n - 1)).divide_by_x() +
         IntPolynomial{2 * sign};
}

/// Lollipop C_{n,r} as the cycle C_r bridged to an end of P_{n-r}:
///   phi = phi(P_{n-r}) (phi(C_r) - phi(C_r)/x) - phi(C_r) phi(P_{n-r-1})/x
///         - phi(P_{n-r}) phi(P_r)/x
inline IntPolynomial phi_lollipop(std::size_t n, std::size_t r) {
  if (r < 3 || r >= n)
    throw Error(ErrorKind::InvalidParameter,
                "lollipop polynomial needs 3 <= r < n");
  const auto cyc = phi_cycle(r);
  const auto cyc_over_x = cyc.divide_by_x();
  const auto tail = phi_path(n - r);
  return tail * (cyc - cyc_over_x) - cyc_over_x * phi_path(n - r - 1) -
         tail * phi_path(r).divide_by_x();
}

/// Matrix B_n, order n.
inline IntMatrix aux_matrix(AuxKind kind, std::size_t n) {
  if (kind == AuxKind::B) return laplacian(make_path(n + 1)).without(0);
  return laplacian(make_path(n + 2)).without(n + 1).without(0);
}

struct IdentityCheck {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct CharpolyReport {
  std::vector<IdentityCheck> checks;

  bool passed() const noexcept {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
};

namespace detail {

inline Graph random_small_graph(std::mt19937_64& rng, std::size_t max_order) {
  std::uniform_int_distribution<std::size_t> order_dist(1, max_order);
  std::bernoulli_distribution coin(0.5);
  Graph g(order_dist(rng));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace detail

/// Compares every recurrence and combination formula against the
/// characteristic polynomial of the explicit matrix, coefficient by
/// coefficient. Failures are collected, never thrown.
inline CharpolyReport verify_charpoly_identities(std::size_t n_max,
                                                 std::uint64_t seed = 0,
                                                 std::size_t joins = 20) {
  if (n_max < 4)
    throw Error(ErrorKind::InvalidParameter, "n_max must be at least 4");
  CharpolyReport report;
  auto run = [&](const std::string& name, auto&& body) {
    IdentityCheck check{name, 0, {}};
    auto expect = [&](bool ok, const std::string& where) {
      ++check.instances;
      if (!ok) check.failures.push_back(where);
    };
    try {
      body(expect);
    } catch (const Error& e) {
      check.failures.push_back(e.what());
    }
    report.checks.push_back(std::move(check));
  };
  const auto x = IntPolynomial::x();

  run("path-recurrence", [&](auto& expect) {
    for (std::size_t n = 1; n <= n_max; ++n)
      expect(phi_path(n) == characteristic_polynomial(make_path(n)),
             "n=" + std::to_string(n));
  });
  run("end-deleted-path", [&](auto& expect) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto b = characteristic_polynomial(aux_matrix(AuxKind::B, n));
      expect(x * b == phi_path(n + 1) + phi_path(n) && phi_aux(AuxKind::B, n) == b,
             "n=" + std::to_string(n));
    }
  });
  run("both-ends-deleted-path", [&](auto& expect) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto h = characteristic_polynomial(aux_matrix(AuxKind::H, n - 1));
      expect(phi_path(n) == x * h && phi_aux(AuxKind::H, n - 1) == h,
             "n=" + std::to_string(n));
    }
  });
  run("cycle-formula", [&](auto& expect) {
    for (std::size_t n = 3; n <= n_max; ++n)
      expect(phi_cycle(n) == characteristic_polynomial(make_cycle(n)),
             "n=" + std::to_string(n));
  });
  run("lollipop-formula", [&](auto& expect) {
    for (std::size_t n = 4; n <= n_max; ++n)
      for (std::size_t r = 3; r < n; ++r)
        expect(phi_lollipop(n, r) ==
                   characteristic_polynomial(make_lollipop(n, r)),
               "(n,r)=(" + std::to_string(n) + "," + std::to_string(r) + ")");
  });
  run("bridge-join", [&](auto& expect) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < joins; ++i) {
      const Graph g1 = detail::random_small_graph(rng, 5);
      const Graph g2 = detail::random_small_graph(rng, 5);
      const Vertex u = std::uniform_int_distribution<Vertex>(0, g1.order() - 1)(rng);
      const Vertex v = std::uniform_int_distribution<Vertex>(0, g2.order() - 1)(rng);
      const auto p1 = characteristic_polynomial(g1);
      const auto p2 = characteristic_polynomial(g2);
      const auto p1u = characteristic_polynomial(laplacian(g1).without(u));
      const auto p2v = characteristic_polynomial(laplacian(g2).without(v));
      const auto joined = characteristic_polynomial(join_by_edge(g1, u, g2, v));
      expect(joined == p1 * p2 - p1 * p2v - p2 * p1u,
             "join #" + std::to_string(i) + " orders " +
                 std::to_string(g1.order()) + "+" + std::to_string(g2.order()));
    }
  });
  return report;
}

}  // namespace unicyclic
