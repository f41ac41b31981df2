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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/exact_linalg.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/spectra.hpp"

using namespace unicyclic;

namespace {

Inertia shifted_inertia(const Graph& g, long num, long den = 1) {
  return inertia(shifted(laplacian(g), make_rational(num, den)));
}

bool same(const Inertia& a, std::size_t neg, std::size_t zero, std::size_t pos) {
  return a.negatives == neg && a.zeros == zero && a.positives == pos;
}

}  // namespace

TEST_CASE("inertia of small matrices", "[inertia]") {
  ExactMatrix swap{{0, -1}, {-1, 0}};
  CHECK(same(inertia(swap), 1, 0, 1));
  CHECK(same(shifted_inertia(make_path(3), 1), 1, 1, 1));
  CHECK(same(shifted_inertia(make_cycle(6), 1), 1, 2, 3));
  CHECK(same(inertia(ExactMatrix::identity(3)), 0, 0, 3));
}

TEST_CASE("nullity", "[inertia]") {
  CHECK(nullity(ExactMatrix(4)) == 4);
  CHECK(nullity(shifted(laplacian(make_cycle(6)), 1)) == 2);
  CHECK(nullity(shifted(laplacian(make_path(4)), 1)) == 0);
}

TEST_CASE("zero diagonal needs a block pivot", "[inertia]") {
  // diag all zero; the 2x2 block [[0,a],[a,0]] is the only admissible pivot
  ExactMatrix m{{0, 2, 1}, {2, 0, 3}, {1, 3, 0}};
  auto ev = oracle::eigenvalues({{0, 2, 1}, {2, 0, 3}, {1, 3, 0}});
  std::size_t neg = 0, pos = 0;
  for (auto x : ev) (x < 0 ? neg : pos) += 1;
  CHECK(same(inertia(m), neg, 0, pos));
}

TEST_CASE("non-symmetric input is rejected", "[inertia][errors]") {
  ExactMatrix m{{1, 2}, {3, 4}};
  try {
    inertia(m);
    FAIL("accepted a non-symmetric matrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSymmetric);
  }
}

TEST_CASE("inertia agrees with a floating-point eigensolver",
          "[inertia][property]") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::size_t compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    ExactMatrix exact(n);
    std::vector<std::vector<double>> approx(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        // sparse entries make rank deficiency and zero pivots common
        const int v = rng() % 3 == 0 ? entry(rng) : 0;
        exact(i, j) = exact(j, i) = v;
        approx[i][j] = approx[j][i] = v;
      }
    auto ev = oracle::eigenvalues(approx);
    bool separated = true;
    std::size_t neg = 0, zero = 0, pos = 0;
    for (auto x : ev) {
      if (std::abs(x) < 1e-8) {
        ++zero;
      } else if (std::abs(x) < 1e-4) {
        separated = false;
      } else {
        (x < 0 ? neg : pos) += 1;
      }
    }
    if (!separated) continue;
    INFO("trial " << trial);
    CHECK(same(inertia(exact), neg, zero, pos));
    ++compared;
  }
  CHECK(compared > 300);
}

TEST_CASE("Laplacian inertia counts components", "[inertia][property]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto g = disjoint_union(random_unicyclic(3 + rng() % 8, rng),
                            random_tree(1 + rng() % 8, rng));
    if (i % 3 == 0) g = disjoint_union(g, make_path(1));
    const auto c = g.component_count();
    CHECK(same(inertia(to_exact(laplacian(g))), 0, c, g.order() - c));
  }
}

TEST_CASE("negative count is monotone in the shift", "[inertia][property]") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    auto g = random_unicyclic(3 + rng() % 12, rng);
    std::size_t prev = 0;
    for (long k = -4; k <= 4 * static_cast<long>(g.order() + 1); ++k) {
      auto neg = shifted_inertia(g, k, 4).negatives;
      CHECK(neg >= prev);
      prev = neg;
    }
    CHECK(prev == g.order());
  }
}

TEST_CASE("dense matrix helpers", "[matrix]") {
  IntMatrix m{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}};
  CHECK(m.is_symmetric());
  auto minor = m.without(1);
  CHECK(minor.order() == 2);
  CHECK(minor == IntMatrix{{1, 3}, {3, 9}});
  auto s = shifted(m, make_rational(1, 2));
  CHECK(s(0, 0) == make_rational(1, 2));
  CHECK(s(0, 1) == 2);
}
