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

#include "oracles.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/spectra.hpp"
#include "unicyclic/witnesses.hpp"

using namespace unicyclic;

namespace {

using Vec = std::vector<std::int64_t>;

// L v computed from the raw edge list, independent of the library check.
Vec laplacian_times(const Graph& g, const Vec& v) {
  auto l = oracle::laplacian_rows(g);
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += l[i][j] * v[j];
  return out;
}

bool fixed_by_laplacian(const Graph& g, const Vec& v) {
  return std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; }) &&
         laplacian_times(g, v) == v;
}

}  // namespace

TEST_CASE("path eigenvectors for 1", "[witness]") {
  CHECK(path_one_vector(3).entries == Vec{1, 0, -1});
  CHECK(path_one_vector(6).entries == Vec{1, 0, -1, -1, 0, 1});
  for (std::size_t n = 3; n <= 60; n += 3)
    CHECK(fixed_by_laplacian(make_path(n), path_one_vector(n).entries));
  try {
    path_one_vector(4);
    FAIL("accepted n = 4");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}

TEST_CASE("cycle eigenvectors for 1", "[witness]") {
  auto [x, y] = cycle_one_vectors(6);
  CHECK(x.entries == Vec{1, 0, -1, -1, 0, 1});
  CHECK(y.entries == Vec{1, 1, 0, -1, -1, 0});
  for (std::size_t n = 6; n <= 60; n += 6) {
    auto [a, b] = cycle_one_vectors(n);
    CHECK(fixed_by_laplacian(make_cycle(n), a.entries));
    CHECK(fixed_by_laplacian(make_cycle(n), b.entries));
    // independent: the 2x2 minor on the first two coordinates is nonzero
    CHECK(a.entries[0] * b.entries[1] - a.entries[1] * b.entries[0] != 0);
  }
  CHECK_THROWS_AS(cycle_one_vectors(9), Error);
}

TEST_CASE("lollipop eigenvectors for 1", "[witness]") {
  auto w = lollipop_one_witness(7, 3);
  REQUIRE(w.has_value());
  CHECK(w->entries == Vec{1, 1, 0, -2, -2, 0, 2});
  CHECK(fixed_by_laplacian(make_lollipop(7, 3), w->entries));

  auto z = lollipop_one_witness(9, 6);
  REQUIRE(z.has_value());
  for (std::size_t i = 6; i < 9; ++i) CHECK(z->entries[i] == 0);
  CHECK(multiplicity(make_lollipop(9, 6), 1) == 2);

  auto p = lollipop_one_witness(9, 7);
  REQUIRE(p.has_value());
  CHECK(fixed_by_laplacian(make_lollipop(9, 7), p->entries));
  CHECK(multiplicity(make_lollipop(9, 7), 1) == 1);

  CHECK_FALSE(lollipop_one_witness(10, 8).has_value());
  CHECK_THROWS_AS(lollipop_one_witness(5, 5), Error);
}

TEST_CASE("every lollipop witness is exact and implies multiplicity", "[witness]") {
  std::size_t found = 0;
  for (std::size_t n = 4; n <= 40; ++n)
    for (std::size_t r = 3; r < n; ++r) {
      auto w = lollipop_one_witness(n, r);
      if (!w) continue;
      ++found;
      const auto g = make_lollipop(n, r);
      INFO("n=" << n << " r=" << r);
      CHECK(fixed_by_laplacian(g, w->entries));
      const auto m = multiplicity(g, 1);
      if (r % 6 == 0) CHECK(m == (n % 3 == 0 ? 2u : 1u));
      else CHECK(m == 1);
    }
  CHECK(found > 100);
}

TEST_CASE("compass eigenvectors for 1", "[witness]") {
  CompassParams p{12, 6, 3, 1};
  auto z = compass_one_witness(p);
  REQUIRE(z.has_value());
  CHECK(fixed_by_laplacian(make_compass(p), z->entries));
  CHECK(multiplicity(make_compass(p), 1) >= 1);
  CHECK_FALSE(compass_one_witness({14, 8, 4, 3}).has_value());
  CHECK_FALSE(compass_one_witness({13, 6, 2, 1}).has_value());
  CHECK_THROWS_AS(compass_one_witness({10, 8, 5, 1}), Error);
}

TEST_CASE("library eigenvector check rejects impostors", "[witness]") {
  auto g = make_path(3);
  Vec ones{1, 1, 1}, zero{0, 0, 0}, good{1, 0, -1};
  CHECK_FALSE(is_laplacian_eigenvector(g, ones, 1));
  CHECK(is_laplacian_eigenvector(g, ones, 0));
  CHECK(is_laplacian_eigenvector(g, good, 1));
  CHECK_FALSE(is_laplacian_eigenvector(g, zero, 1));
}
