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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unicyclic/error.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/spectra.hpp"
#include "unicyclic/structure.hpp"

namespace unicyclic {

inline constexpr std::size_t ceil_div(std::size_t a, std::size_t b) {
  return (a + b - 1) / b;
}

/// ceil(d/3) + ceil(r/6) - 1, the unicyclic lower bound on m_G[0,1).
inline std::size_t main_lower_bound(std::size_t d, std::size_t r) {
  if (d < 1 || r < 3)
    throw Error(ErrorKind::InvalidParameter, "bound needs d >= 1 and r >= 3");
  return ceil_div(d, 3) + ceil_div(r, 6) - 1;
}

/// Lollipop bound, one higher when the girth is not a multiple of 6.
inline std::size_t refined_lollipop_bound(std::size_t d, std::size_t r) {
  if (d < 1 || r < 3)
    throw Error(ErrorKind::InvalidParameter, "bound needs d >= 1 and r >= 3");
  if (r % 6 == 0) return main_lower_bound(d, r);
  return ceil_div(d + 1, 3) + ceil_div(r, 6) - 1;
}

inline std::size_t lollipop_diameter(std::size_t n, std::size_t r) {
  return n - ceil_div(r, 2);
}

/// d/3 + ceil(r/6) when d = n - ceil(r/2) is a multiple of 3 and r is not a
/// multiple of 6; otherwise no exact value is known.
inline std::optional<std::size_t> lollipop_exact_count(std::size_t n,
                                                       std::size_t r) {
  if (r < 3 || r >= n)
    throw Error(ErrorKind::InvalidParameter, "lollipop needs 3 <= r < n");
  const std::size_t d = lollipop_diameter(n, r);
  if (d % 3 != 0 || r % 6 == 0) return std::nullopt;
  return d / 3 + ceil_div(r, 6);
}

/// m_{C_n}[0,1) = 2 ceil(n/6) - 1.
inline std::size_t cycle_exact_count(std::size_t n) {
  return 2 * ceil_div(n, 6) - 1;
}

struct CompassBounds {
  std::size_t base = 0;
  std::optional<std::size_t> strengthened;
};

/// Base bound for every compass, plus the stronger bound when
/// n = 0 (mod 3), r = 0 (mod 6), r' = r/2 and t = 1 (mod 3).
inline CompassBounds compass_bounds(const CompassParams& p) {
  require_valid(p);
  CompassBounds out;
  const std::size_t d = p.diameter();
  out.base = main_lower_bound(d, p.r);
  if (p.n % 3 == 0 && p.r % 6 == 0 && 2 * p.r_prime == p.r && p.t % 3 == 1)
    out.strengthened = ceil_div(d, 3) + ceil_div(p.r, 6);
  return out;
}

/// Exact domination number by branch and bound over closed neighbourhoods.
/// The greedy cover seeds the incumbent; ceil((d+1)/3) and
/// ceil(undominated / (Delta + 1)) prune.
inline std::size_t domination_number(const Graph& g, std::size_t cap = 32) {
  const std::size_t n = g.order();
  if (n > cap || n > 64)
    throw Error(ErrorKind::SizeCapExceeded,
                "domination number capped at n=" + std::to_string(cap) +
                    ", got n=" + std::to_string(n));
  if (n == 0) return 0;
  if (!g.is_connected())
    throw Error(ErrorKind::NotConnected, "domination number");
  using Mask = std::uint64_t;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> closed(n);
  std::size_t max_closed = 0;
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = Mask{1} << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= Mask{1} << w;
    max_closed = std::max<std::size_t>(max_closed, std::popcount(closed[v]));
  }

  std::size_t best = 0;
  for (Mask covered = 0; covered != all; ++best) {
    Vertex pick = 0;
    int gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      const int c = std::popcount(closed[v] & ~covered);
      if (c > gain) {
        gain = c;
        pick = v;
      }
    }
    covered |= closed[pick];
  }
  const std::size_t floor_bound = ceil_div(diameter_and_path(g).diameter + 1, 3);

  auto search = [&](auto&& self, Mask covered, std::size_t used) -> void {
    if (best == floor_bound) return;
    if (covered == all) {
      best = std::min(best, used);
      return;
    }
    const std::size_t open = static_cast<std::size_t>(std::popcount(all & ~covered));
    if (used + ceil_div(open, max_closed) >= best) return;
    const Vertex u = static_cast<Vertex>(std::countr_zero(all & ~covered));
    // Some vertex of N[u] must be in the set.
    for (Mask options = closed[u]; options != 0; options &= options - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(options));
      self(self, covered | closed[v], used + 1);
    }
  };
  search(search, 0, 0);
  return best;
}

struct BoundVerdicts {
  bool main_bound_ok = false;
  std::optional<bool> refined_bound_ok;
  std::optional<bool> hedetniemi_ok;  // count01 <= gamma
  std::optional<bool> chain_ok;       // (d+1)/3 <= main <= count01 <= gamma, r >= 7
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t girth = 0;
  std::size_t diameter = 0;
  std::size_t count01 = 0;
  std::size_t mult1 = 0;
  std::optional<std::size_t> gamma;
  std::size_t main_bound = 0;
  std::optional<std::size_t> refined_bound;
  std::optional<std::size_t> alpha;  // floor(r/2) - r', compass cores only
  std::size_t k = 0;                 // strongest applicable bound
  BoundVerdicts verdicts;
  CoreClassification core;

  bool all_ok() const {
    return verdicts.main_bound_ok && verdicts.refined_bound_ok.value_or(true) &&
           verdicts.hedetniemi_ok.value_or(true) && verdicts.chain_ok.value_or(true);
  }
};

/// Refined lower bound certified on the core, if its family has one. A bound
/// on the core carries over to g since g is the core plus pendant trees with
/// the same diameter and girth.
inline std::optional<std::size_t> refined_core_bound(const CoreClassification& c) {
  switch (c.kind) {
    case CoreKind::Cycle:
      return cycle_exact_count(c.r);
    case CoreKind::Lollipop:
      if (c.r % 6 != 0) return refined_lollipop_bound(c.diameter, c.r);
      return std::nullopt;
    case CoreKind::Compass: {
      // The tails are interchangeable, so try both labelings.
      CompassParams p{c.n, c.r, c.r_prime, c.t};
      CompassParams q{c.n, c.r, c.r_prime, c.n - c.r - c.t};
      if (!p.valid() || !q.valid()) return std::nullopt;
      auto a = compass_bounds(p).strengthened;
      auto b = compass_bounds(q).strengthened;
      if (a || b) return std::max(a.value_or(0), b.value_or(0));
      return std::nullopt;
    }
    case CoreKind::Other:
      return std::nullopt;
  }
  return std::nullopt;
}

/// Exact counts, bounds and verdicts for a connected unicyclic graph. The
/// counts are always taken on g itself.
inline BoundReport analyze(const Graph& g, std::size_t gamma_cap = 32) {
  BoundReport rep;
  rep.core = reduce_to_core(g);  // throws not-unicyclic / not-connected
  rep.n = g.order();
  rep.girth = rep.core.r;
  rep.diameter = rep.core.diameter;
  rep.count01 = count_below_one(g);
  rep.mult1 = multiplicity(g, 1);
  if (rep.n <= gamma_cap) rep.gamma = domination_number(g, gamma_cap);
  rep.main_bound = main_lower_bound(rep.diameter, rep.girth);
  rep.refined_bound = refined_core_bound(rep.core);
  if (rep.core.kind == CoreKind::Compass)
    rep.alpha = rep.girth / 2 - rep.core.r_prime;
  rep.k = std::max(rep.main_bound, rep.refined_bound.value_or(0));

  rep.verdicts.main_bound_ok = rep.count01 >= rep.main_bound;
  if (rep.refined_bound) rep.verdicts.refined_bound_ok = rep.count01 >= *rep.refined_bound;
  if (rep.gamma) rep.verdicts.hedetniemi_ok = rep.count01 <= *rep.gamma;
  if (rep.girth >= 7 && rep.gamma)
    rep.verdicts.chain_ok = rep.diameter + 1 <= 3 * rep.main_bound &&
                            rep.main_bound <= rep.count01 &&
                            rep.count01 <= *rep.gamma;
  return rep;
}

}  // namespace unicyclic
