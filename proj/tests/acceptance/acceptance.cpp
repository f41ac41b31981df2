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

// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "unicyclic/unicyclic.hpp"

using namespace unicyclic;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& where) {
    ++checked;
    if (!ok) failures.push_back(where);
  }
};

std::string nr(std::size_t n, std::size_t r) {
  return "(n,r)=(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

void path_law(Tally& t) {
  for (std::size_t n = 1; n <= 120; ++n) {
    const auto g = make_path(n);
    t.expect(count_below_one(g) == ceil_div(n, 3), "count P_" + std::to_string(n));
    t.expect((multiplicity(g, 1) == 1) == (n % 3 == 0), "m(1) P_" + std::to_string(n));
  }
}

void cycle_law(Tally& t) {
  for (std::size_t n = 3; n <= 120; ++n) {
    const auto g = make_cycle(n);
    t.expect(count_below_one(g) == 2 * ceil_div(n, 6) - 1, "count C_" + std::to_string(n));
    t.expect((multiplicity(g, 1) == 2) == (n % 6 == 0), "m(1) C_" + std::to_string(n));
  }
}

void worked_examples(Tally& t) {
  t.expect(count_interval(make_lollipop(12, 8), 0, 1).count == 4, "C_{12,8}");
  t.expect(count_interval(make_compass({14, 8, 4, 3}), 0, 1).count == 5, "C_{14,8}(4,3)");
}

void lollipops(Tally& t) {
  const long phi_at_one[6] = {0, 1, 2, -4, -1, 1};
  for (std::size_t n = 3; n <= 40; ++n)
    for (std::size_t r = 3; r <= n; ++r) {
      const auto g = make_lollipop(n, r);
      const std::size_t d = n - ceil_div(r, 2);
      const std::size_t count = count_below_one(g);
      t.expect(count >= ceil_div(d, 3) + ceil_div(r, 6) - 1, "bound " + nr(n, r));
      if (r == n) continue;  // the cycle itself
      if (r % 6 != 0)
        t.expect(count >= ceil_div(d + 1, 3) + ceil_div(r, 6) - 1, "refined " + nr(n, r));
      if (d % 3 == 0 && r % 6 != 0) {
        t.expect(count == d / 3 + ceil_div(r, 6), "exact " + nr(n, r));
        t.expect(phi_lollipop(n, r).eval(1) == phi_at_one[r % 6], "phi(1) " + nr(n, r));
      }
    }
}

void compasses(Tally& t) {
  for (std::size_t n = 5; n <= 26; ++n)
    for (std::size_t r = 3; r + 2 <= n; ++r)
      for (std::size_t rp = 1; rp <= r / 2; ++rp)
        for (std::size_t tt = 1; tt + r < n; ++tt) {
          const CompassParams p{n, r, rp, tt};
          if (!p.valid()) continue;
          const auto g = make_compass(p);
          const std::size_t d = diameter_and_path(g).diameter;
          const std::size_t count = count_below_one(g);
          t.expect(d == p.diameter(), "diameter " + p.to_string());
          t.expect(count >= ceil_div(d, 3) + ceil_div(r, 6) - 1, "base " + p.to_string());
          if (n % 3 == 0 && r % 6 == 0 && 2 * rp == r && tt % 3 == 1)
            t.expect(count >= ceil_div(d, 3) + ceil_div(r, 6), "strengthened " + p.to_string());
        }
}

void witnesses(Tally& t) {
  auto fixed = [](const Graph& g, const std::vector<std::int64_t>& v) {
    return is_laplacian_eigenvector(g, v, 1);
  };
  auto guarded = [&](const std::string& where, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      t.expect(false, where + ": " + e.what());
    }
  };
  for (std::size_t n = 3; n <= 60; n += 3)
    guarded("P_" + std::to_string(n), [&] {
      t.expect(fixed(make_path(n), path_one_vector(n).entries), "P_" + std::to_string(n));
    });
  for (std::size_t n = 6; n <= 60; n += 6)
    guarded("C_" + std::to_string(n), [&] {
      auto [x, y] = cycle_one_vectors(n);
      const auto g = make_cycle(n);
      t.expect(fixed(g, x.entries) && fixed(g, y.entries), "C_" + std::to_string(n));
    });
  for (std::size_t n = 4; n <= 60; ++n)
    for (std::size_t r = 3; r < n; ++r) {
      const bool a = r % 6 == 0, b = r % 6 == 1 && n % 3 == 0, c = r % 6 == 3 && n % 3 == 1;
      if (!(a || b || c)) continue;
      guarded(nr(n, r), [&] {
        const auto g = make_lollipop(n, r);
        auto w = lollipop_one_witness(n, r);
        t.expect(w && fixed(g, w->entries), "witness " + nr(n, r));
        const std::size_t expect = a && n % 3 == 0 ? 2 : 1;
        t.expect(multiplicity(g, 1) == expect, "m(1) " + nr(n, r));
      });
    }
  for (std::size_t r = 6; r + 2 <= 60; r += 6)
    for (std::size_t n = r + 2; n <= 60; ++n)
      for (std::size_t tt = 1; tt + r < n; ++tt) {
        const CompassParams p{n, r, r / 2, tt};
        if (!p.valid()) continue;
        guarded(p.to_string(), [&] {
          auto w = compass_one_witness(p);
          t.expect(w && fixed(make_compass(p), w->entries), "witness " + p.to_string());
        });
        if (n <= 30)
          t.expect(multiplicity(make_compass(p), 1) >= 1, "m(1) " + p.to_string());
      }
}

void charpoly(Tally& t) {
  const auto report = verify_charpoly_identities(12, 0, 20);
  for (const auto& c : report.checks) {
    t.checked += c.instances;
    for (const auto& f : c.failures) t.failures.push_back(c.name + " " + f);
  }
}

void interlacing(Tally& t) {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 30)(rng);
    const auto g = random_unicyclic(n, rng);
    const auto edges = g.edges();
    const auto e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    t.expect(check_interlacing(g, e, 1e-8), "pair #" + std::to_string(i));
  }
}

void attachment(Tally& t) {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 15)(rng);
    const auto g = random_unicyclic(n, rng);
    const std::string tag = "instance #" + std::to_string(i);
    // pendant deletion: grow a pendant if g has none
    Graph host = g;
    Vertex leaf = host.order();
    for (Vertex v = 0; v < host.order() && leaf == host.order(); ++v)
      if (host.degree(v) == 1) leaf = v;
    if (leaf == host.order()) {
      leaf = host.add_vertex();
      host.add_edge(std::uniform_int_distribution<Vertex>(0, n - 1)(rng), leaf);
    }
    t.expect(count_below_one(host) >= count_below_one(host.without_vertex(leaf)),
             tag + " pendant");
    const std::size_t m = i % 2 == 0 ? 3 : 6;
    const Vertex at = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    const auto joined = join_by_edge(g, at, make_path(m), 0);
    t.expect(multiplicity(joined, 1) == multiplicity(g, 1), tag + " P_" + std::to_string(m));
  }
}

void exhaustive(Tally& t) {
  for (std::size_t n = 3; n <= 10; ++n) {
    std::size_t index = 0;
    enumerate_unicyclic(n, [&](const Graph& g) {
      const std::size_t d = diameter_and_path(g).diameter;
      const std::size_t r = unicyclic_decompose(g).girth();
      const std::size_t count = count_below_one(g);
      const std::string tag = "n=" + std::to_string(n) + " #" + std::to_string(index++);
      t.expect(count >= ceil_div(d, 3) + ceil_div(r, 6) - 1, tag + " bound");
      t.expect(count <= domination_number(g), tag + " domination");
    });
  }
}

void trees(Tally& t) {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 20)(rng);
    const auto g = random_tree(n, rng);
    const std::size_t d = diameter_and_path(g).diameter;
    const std::size_t count = count_below_one(g);
    const std::string tag = "tree #" + std::to_string(i);
    t.expect(ceil_div(d + 1, 3) <= count, tag + " lower");
    t.expect(count <= domination_number(g), tag + " upper");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    void (*run)(Tally&);
  };
  const Criterion criteria[] = {
      {"AC1", "path count and multiplicity law, n <= 120", path_law},
      {"AC2", "cycle count and multiplicity law, n <= 120", cycle_law},
      {"AC3", "worked lollipop and compass counts", worked_examples},
      {"AC4", "lollipop bounds, exact counts and values at 1, n <= 40", lollipops},
      {"AC5", "compass base and strengthened bounds, n <= 26", compasses},
      {"AC6", "eigenvalue-1 witnesses and multiplicities, n <= 60", witnesses},
      {"AC7", "characteristic polynomial identities, n <= 12", charpoly},
      {"AC8", "interlacing on 200 random edge deletions", interlacing},
      {"AC9", "pendant monotonicity and path attachment, 100 instances", attachment},
      {"AC10", "main bound and domination on all unicyclic graphs, n <= 10", exhaustive},
      {"AC11", "tree diameter and domination bounds, 200 random trees", trees},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(tally);
    } catch (const std::exception& e) {
      tally.failures.push_back(std::string("aborted: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = tally.failures.empty() && tally.checked > 0;
    std::printf("[%s] %-4s %s (%zu checks, %zu failures, %.1fs)\n", ok ? "PASS" : "FAIL",
                c.id, c.what, tally.checked, tally.failures.size(), secs);
    for (std::size_t i = 0; i < tally.failures.size() && i < 5; ++i)
      std::printf("       %s\n", tally.failures[i].c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
