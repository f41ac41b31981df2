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

#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/suites.hpp"
#include "unicyclic/sweep.hpp"

using namespace unicyclic;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> cells_of(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

std::string run_sweep(SweepFamily family, std::size_t lo, std::size_t hi) {
  std::ostringstream out;
  sweep(family, lo, hi, out);
  return out.str();
}

}  // namespace

TEST_CASE("enumeration counts on small orders", "[enumerate]") {
  CHECK(all_unicyclic(3).size() == 1);
  CHECK(all_unicyclic(3).front() == make_cycle(3));
  CHECK(all_unicyclic(4).size() == 2);
  CHECK(all_unicyclic(5).size() == 5);
  CHECK_THROWS_AS(all_unicyclic(2), Error);
  CHECK_THROWS_AS(all_unicyclic(kMaxEnumerationOrder + 1), Error);
}

TEST_CASE("enumeration matches labelled brute force up to isomorphism",
          "[enumerate][property]") {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::set<std::vector<bool>> classes;
    oracle::for_each_labelled_unicyclic(
        n, [&](const Graph& g) { classes.insert(oracle::canonical_form(g)); });
    std::set<std::vector<bool>> produced;
    for (const auto& g : all_unicyclic(n)) {
      CHECK(g.is_connected());
      CHECK(g.size() == n);
      CHECK(produced.insert(oracle::canonical_form(g)).second);  // no repeats
    }
    INFO("n=" << n);
    CHECK(produced == classes);
  }
}

TEST_CASE("orbit sums reproduce the labelled counts", "[enumerate][property]") {
  for (std::size_t n = 3; n <= 8; ++n) {
    std::size_t labelled = 0;
    oracle::for_each_labelled_unicyclic(n, [&](const Graph&) { ++labelled; });
    std::size_t orbit_sum = 0;
    for (const auto& g : all_unicyclic(n))
      orbit_sum += oracle::factorial(n) / oracle::automorphism_count(g);
    INFO("n=" << n);
    CHECK(orbit_sum == labelled);
  }
}

TEST_CASE("random generators give the requested shapes", "[enumerate]") {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 30; ++n) {
    auto t = random_tree(n, rng);
    CHECK(t.is_connected());
    CHECK(t.size() + 1 == n);
    if (n >= 3) {
      auto u = random_unicyclic(n, rng);
      CHECK(u.is_connected());
      CHECK(u.size() == n);
    }
  }
  std::mt19937_64 a(99), b(99);
  CHECK(random_unicyclic(15, a) == random_unicyclic(15, b));
}

TEST_CASE("CSV rows leave inapplicable cells empty", "[sweep]") {
  auto row = lollipop_row(12, 8);
  auto cells = cells_of(to_csv(row));
  REQUIRE(cells.size() == 14);
  CHECK(cells[0] == "lollipop");
  CHECK(cells[1] == "12");
  CHECK(cells[2] == "8");
  CHECK(cells[3].empty());
  CHECK(cells[4].empty());
  CHECK(cells[5] == "8");
  CHECK(cells[9] == "4");
  CHECK(cells[12] == "true");
  CHECK(cells[13] == "true");
}

TEST_CASE("cycle sweep reproduces the closed-form count", "[sweep]") {
  auto lines = lines_of(run_sweep(SweepFamily::Cycle, 3, 60));
  REQUIRE(lines.size() == 59);
  CHECK(lines[0] == kCsvHeader);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = cells_of(lines[i]);
    const std::size_t n = std::stoul(cells[1]);
    CHECK(std::stoul(cells[9]) == 2 * ((n + 5) / 6) - 1);
    CHECK(cells[12] == "true");
  }
}

TEST_CASE("lollipop sweep satisfies the bound everywhere", "[sweep]") {
  auto lines = lines_of(run_sweep(SweepFamily::Lollipop, 4, 20));
  std::size_t rows = 0;
  std::pair<std::size_t, std::size_t> prev{0, 0};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = cells_of(lines[i]);
    std::pair<std::size_t, std::size_t> key{std::stoul(cells[1]), std::stoul(cells[2])};
    CHECK(prev < key);  // lexicographic order
    prev = key;
    CHECK(cells[12] == "true");
    CHECK(cells[13] == "true");
    ++rows;
  }
  std::size_t expected = 0;
  for (std::size_t n = 4; n <= 20; ++n) expected += n - 2;
  CHECK(rows == expected);
}

TEST_CASE("compass sweep flags the strengthened cases", "[sweep]") {
  auto lines = lines_of(run_sweep(SweepFamily::Compass, 6, 16));
  std::size_t strengthened = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = cells_of(lines[i]);
    CHECK(cells[12] == "true");
    if (!cells[8].empty()) {
      ++strengthened;
      CHECK(std::stoul(cells[9]) >= std::stoul(cells[8]));
    }
  }
  CHECK(strengthened > 0);
  CHECK(lines[1].rfind("compass,", 0) == 0);
}

TEST_CASE("sweeps are deterministic", "[sweep]") {
  CHECK(run_sweep(SweepFamily::Unicyclic, 3, 7) == run_sweep(SweepFamily::Unicyclic, 3, 7));
  CHECK_THROWS_AS(run_sweep(SweepFamily::Cycle, 9, 3), Error);
  CHECK(parse_sweep_family("compass") == SweepFamily::Compass);
  CHECK_THROWS_AS(parse_sweep_family("tree"), Error);
}

TEST_CASE("named suites pass at reduced sizes", "[suites]") {
  const std::map<std::string, std::size_t> sizes{
      {"paths", 40},     {"cycles", 40},       {"lollipops", 14},
      {"compasses", 14}, {"witnesses", 30},    {"charpoly", 8},
      {"exhaustive", 7}, {"inequalities", 30}, {"interlacing", 15},
      {"attachment", 10}, {"trees", 12}};
  REQUIRE(sizes.size() == suite_names().size());
  for (auto name : suite_names()) {
    auto report = run_suite(name, {sizes.at(std::string(name)), 0});
    INFO(report.suite << ": " << (report.failures.empty() ? "" : report.failures[0]));
    CHECK(report.passed());
    CHECK(report.instances > 0);
    CHECK(report.wall_seconds >= 0);
  }
}

TEST_CASE("suites are deterministic for a fixed seed", "[suites]") {
  auto a = run_suite("trees", {12, 7});
  auto b = run_suite("trees", {12, 7});
  CHECK(a.instances == b.instances);
  CHECK(a.failures == b.failures);
}

TEST_CASE("unknown suite names are rejected", "[suites][errors]") {
  try {
    run_suite("everything");
    FAIL("unknown suite accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}
