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
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "unicyclic/bounds.hpp"
#include "unicyclic/charpoly.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/spectra.hpp"
#include "unicyclic/structure.hpp"
#include "unicyclic/witnesses.hpp"

namespace unicyclic {

struct SuiteLimits {
  std::optional<std::size_t> max_n;  // suite-specific default when empty
  std::uint64_t seed = 0;
};

struct VerifyReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  double wall_seconds = 0;

  bool passed() const noexcept { return failures.empty(); }
};

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {
      "paths",     "cycles",  "lollipops",   "compasses",  "witnesses",
      "charpoly",  "exhaustive", "inequalities", "interlacing", "attachment",
      "trees"};
  return names;
}

namespace detail {

class SuiteRun {
 public:
  explicit SuiteRun(VerifyReport& report) : report_(report) {}

  void check(bool ok, const std::string& where) {
    ++report_.instances;
    if (!ok) report_.failures.push_back(where);
  }

 private:
  VerifyReport& report_;
};

inline std::string nr(std::size_t n, std::size_t r) {
  return "(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
}

/// phi(C_{n,r}; 1) for d = 0 (mod 3) and r != 0 (mod 6), by r mod 6.
inline long lollipop_phi_at_one(std::size_t r) {
  static constexpr long kTable[6] = {0, 1, 2, -4, -1, 1};
  return kTable[r % 6];
}

inline void paths_suite(SuiteRun& run, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Graph p = make_path(n);
    run.check(count_below_one(p) == ceil_div(n, 3), "count P_" + std::to_string(n));
    run.check((multiplicity(p, 1) == 1) == (n % 3 == 0),
              "m(1) P_" + std::to_string(n));
  }
}

inline void cycles_suite(SuiteRun& run, std::size_t max_n) {
  for (std::size_t n = 3; n <= max_n; ++n) {
    const Graph c = make_cycle(n);
    const auto count = count_below_one(c);
    run.check(count == cycle_exact_count(n), "count C_" + std::to_string(n));
    run.check((multiplicity(c, 1) == 2) == (n % 6 == 0),
              "m(1) C_" + std::to_string(n));
    run.check(count >= main_lower_bound(n / 2, n), "bound C_" + std::to_string(n));
  }
}

inline void lollipops_suite(SuiteRun& run, std::size_t max_n) {
  for (std::size_t n = 4; n <= max_n; ++n)
    for (std::size_t r = 3; r <= n; ++r) {
      const Graph g = make_lollipop(n, r);
      const auto d = diameter_and_path(g).diameter;
      const auto count = count_below_one(g);
      run.check(d == lollipop_diameter(n, r), "diameter " + nr(n, r));
      run.check(count >= main_lower_bound(d, r), "bound " + nr(n, r));
      run.check(count >= refined_lollipop_bound(d, r), "refined " + nr(n, r));
      if (r == n) continue;
      if (auto exact = lollipop_exact_count(n, r)) {
        run.check(count == *exact, "exact count " + nr(n, r));
        run.check(eval_at(phi_lollipop(n, r), 1) == lollipop_phi_at_one(r),
                  "phi(1) " + nr(n, r));
      }
    }
}

inline void compasses_suite(SuiteRun& run, std::size_t max_n) {
  for (std::size_t n = 5; n <= max_n; ++n)
    for (std::size_t r = 3; r + 2 <= n; ++r)
      for (std::size_t rp = 1; rp <= r / 2; ++rp)
        for (std::size_t t = 1; t + r < n; ++t) {
          const CompassParams p{n, r, rp, t};
          if (!p.valid()) {
            // Same drawing, but not a diametral core: only the unicyclic
            // bound with the measured diameter applies.
            const Graph g = make_compass_layout(p);
            run.check(count_below_one(g) >=
                          main_lower_bound(diameter_and_path(g).diameter, r),
                      "measured-diameter bound " + p.to_string());
            continue;
          }
          const Graph g = make_compass(p);
          const auto count = count_below_one(g);
          const auto bounds = compass_bounds(p);
          run.check(diameter_and_path(g).diameter == p.diameter(),
                    "diameter " + p.to_string());
          run.check(count >= bounds.base, "base " + p.to_string());
          if (bounds.strengthened)
            run.check(count >= *bounds.strengthened, "strengthened " + p.to_string());
        }
}

inline void witnesses_suite(SuiteRun& run, std::size_t max_n) {
  auto guarded = [&](const std::string& where, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      run.check(false, where + ": " + e.what());
    }
  };
  for (std::size_t n = 3; n <= max_n; n += 3)
    guarded("path " + std::to_string(n), [&] {
      auto w = path_one_vector(n);
      run.check(is_laplacian_eigenvector(make_path(n), w.entries, 1),
                "path " + std::to_string(n));
    });
  for (std::size_t n = 6; n <= max_n; n += 6)
    guarded("cycle " + std::to_string(n), [&] {
      auto [x, y] = cycle_one_vectors(n);
      const Graph c = make_cycle(n);
      // x and y are independent iff some 2x2 minor is nonzero.
      bool independent = false;
      for (std::size_t i = 0; i + 1 < n && !independent; ++i)
        independent = x.entries[i] * y.entries[i + 1] -
                          x.entries[i + 1] * y.entries[i] != 0;
      run.check(is_laplacian_eigenvector(c, x.entries, 1) &&
                    is_laplacian_eigenvector(c, y.entries, 1) && independent,
                "cycle " + std::to_string(n));
    });
  for (std::size_t n = 4; n <= max_n; ++n)
    for (std::size_t r = 3; r < n; ++r)
      guarded("lollipop " + nr(n, r), [&] {
        const auto w = lollipop_one_witness(n, r);
        const bool case_a = r % 6 == 0;
        const bool case_b = r % 6 == 1 && n % 3 == 0;
        const bool case_c = r % 6 == 3 && n % 3 == 1;
        run.check(w.has_value() == (case_a || case_b || case_c),
                  "lollipop witness availability " + nr(n, r));
        if (!w) return;
        const Graph g = make_lollipop(n, r);
        run.check(is_laplacian_eigenvector(g, w->entries, 1),
                  "lollipop witness " + nr(n, r));
        const std::size_t expected = case_a && n % 3 == 0 ? 2 : 1;
        run.check(multiplicity(g, 1) == expected, "lollipop m(1) " + nr(n, r));
      });
  for (std::size_t r = 6; r + 2 <= max_n; r += 6)
    for (std::size_t n = r + 2; n <= max_n; ++n)
      for (std::size_t t = 1; t + r < n; ++t) {
        const CompassParams p{n, r, r / 2, t};
        if (!p.valid()) continue;
        guarded("compass " + p.to_string(), [&] {
          const auto w = compass_one_witness(p);
          run.check(w && is_laplacian_eigenvector(make_compass(p), w->entries, 1),
                    "compass witness " + p.to_string());
          if (w && n <= 30)
            run.check(multiplicity(make_compass(p), 1) >= 1,
                      "compass m(1) " + p.to_string());
        });
      }
}

inline void charpoly_suite(SuiteRun& run, std::size_t max_n, std::uint64_t seed) {
  const auto report = verify_charpoly_identities(max_n, seed);
  for (const auto& c : report.checks) {
    run.check(c.passed(), c.name);
    for (const auto& f : c.failures) run.check(false, c.name + " " + f);
  }
  // Root counts split cleanly at 1, and the monic polynomial is positive
  // beyond the spectrum.
  const std::size_t family_max = std::min<std::size_t>(max_n + 8, 20);
  for (std::size_t n = 4; n <= family_max; ++n)
    for (std::size_t r = 3; r < n; ++r) {
      const Graph g = make_lollipop(n, r);
      const auto below = count_interval(g, 0, 1).count;
      const auto above = count_interval(g, 1, static_cast<long>(n + 1)).count;
      run.check(below + above == n, "root split " + nr(n, r));
      run.check(sgn(eval_at(phi_lollipop(n, r), static_cast<long>(n + 1))) > 0,
                "sign beyond spectrum " + nr(n, r));
    }
}

inline void exhaustive_suite(SuiteRun& run, std::size_t max_n) {
  for (std::size_t n = 3; n <= max_n; ++n) {
    std::size_t index = 0;
    enumerate_unicyclic(n, [&](const Graph& g) {
      const std::string where =
          "n=" + std::to_string(n) + " #" + std::to_string(index++);
      const auto rep = analyze(g);
      run.check(rep.verdicts.main_bound_ok, "main bound " + where);
      run.check(rep.verdicts.hedetniemi_ok.value_or(false), "gamma " + where);
      run.check(rep.verdicts.refined_bound_ok.value_or(true), "core bound " + where);
      run.check(diameter_and_path(rep.core.core).diameter == rep.diameter,
                "core diameter " + where);
    });
  }
}

inline void interlacing_suite(SuiteRun& run, std::size_t max_n, std::uint64_t seed,
                              std::size_t pairs = 200) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
    std::bernoulli_distribution coin(density(rng));
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.size() == 0) g.add_edge(0, 1);
    const auto edges = g.edges();
    const Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    run.check(check_interlacing(g, e), "pair #" + std::to_string(i) +
                                           " n=" + std::to_string(n));
  }
}

inline void attachment_suite(SuiteRun& run, std::size_t max_n, std::uint64_t seed,
                             std::size_t instances = 100) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_n)(rng);
    const Graph g = i % 2 == 0 ? random_unicyclic(n, rng) : random_tree(n, rng);
    const std::string where = "instance #" + std::to_string(i);
    std::vector<Vertex> pendants;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) == 1) pendants.push_back(v);
    if (!pendants.empty()) {
      const Vertex v = pendants[std::uniform_int_distribution<std::size_t>(
          0, pendants.size() - 1)(rng)];
      run.check(count_below_one(g) >= count_below_one(g.without_vertex(v)),
                "pendant " + where);
    }
    const auto m1 = multiplicity(g, 1);
    for (std::size_t m : {3u, 6u}) {
      const Vertex at = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
      const Graph h = join_by_edge(g, at, make_path(m), 0);
      run.check(multiplicity(h, 1) == m1,
                "P_" + std::to_string(m) + " attachment " + where);
    }
  }
}

inline void trees_suite(SuiteRun& run, std::size_t max_n, std::uint64_t seed,
                        std::size_t instances = 200) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
    const Graph t = random_tree(n, rng);
    const auto d = diameter_and_path(t).diameter;
    const auto count = count_below_one(t);
    const auto gamma = domination_number(t);
    run.check(ceil_div(d + 1, 3) <= count && count <= gamma,
              "tree #" + std::to_string(i) + " n=" + std::to_string(n));
  }
}

inline void inequalities_suite(SuiteRun& run, std::size_t max_n, std::uint64_t seed) {
  for (std::size_t n = 3; n <= std::max<std::size_t>(max_n, 3); ++n) {
    const std::size_t count = cycle_exact_count(n);
    run.check(count >= main_lower_bound(n / 2, n), "cycle law C_" + std::to_string(n));
  }
  for (std::size_t n = 4; n <= 20; ++n)
    for (std::size_t r = 3; r <= n; ++r) {
      const auto rep = analyze(make_lollipop(n, r));
      run.check(rep.verdicts.hedetniemi_ok.value_or(false) &&
                    rep.verdicts.chain_ok.value_or(true),
                "lollipop chain " + nr(n, r));
    }
  for (std::size_t n = 5; n <= 16; ++n)
    for (std::size_t r = 3; r + 2 <= n; ++r)
      for (std::size_t rp = 1; rp <= r / 2; ++rp)
        for (std::size_t t = 1; t + r < n; ++t) {
          const CompassParams p{n, r, rp, t};
          if (!p.valid()) continue;
          const auto rep = analyze(make_compass(p));
          run.check(rep.verdicts.hedetniemi_ok.value_or(false) &&
                        rep.verdicts.chain_ok.value_or(true),
                    "compass chain " + p.to_string());
        }
  trees_suite(run, 20, seed);
}

}  // namespace detail

/// Runs one named verification suite. max_n defaults per suite; failures are
/// collected, and deterministic for fixed limits and seed.
inline VerifyReport run_suite(std::string_view name, const SuiteLimits& limits = {}) {
  VerifyReport report;
  report.suite = std::string(name);
  detail::SuiteRun run(report);
  const auto start = std::chrono::steady_clock::now();
  auto max_n = [&](std::size_t fallback) { return limits.max_n.value_or(fallback); };
  if (std::find(suite_names().begin(), suite_names().end(), name) ==
      suite_names().end())
    throw Error(ErrorKind::InvalidParameter, "unknown suite '" + report.suite + "'");
  try {
    if (name == "paths") detail::paths_suite(run, max_n(120));
    else if (name == "cycles") detail::cycles_suite(run, max_n(120));
    else if (name == "lollipops") detail::lollipops_suite(run, max_n(40));
    else if (name == "compasses") detail::compasses_suite(run, max_n(26));
    else if (name == "witnesses") detail::witnesses_suite(run, max_n(60));
    else if (name == "charpoly") detail::charpoly_suite(run, std::max<std::size_t>(max_n(12), 4), limits.seed);
    else if (name == "exhaustive") detail::exhaustive_suite(run, std::min(max_n(10), kMaxEnumerationOrder));
    else if (name == "inequalities") detail::inequalities_suite(run, max_n(120), limits.seed);
    else if (name == "interlacing") detail::interlacing_suite(run, std::max<std::size_t>(max_n(30), 2), limits.seed);
    else if (name == "attachment") detail::attachment_suite(run, std::max<std::size_t>(max_n(15), 3), limits.seed);
    else if (name == "trees") detail::trees_suite(run, std::max<std::size_t>(max_n(20), 2), limits.seed);
  } catch (const Error& e) {
    report.failures.push_back(std::string("aborted: ") + e.what());
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace unicyclic
