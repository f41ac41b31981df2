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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "unicyclic/bounds.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/spectra.hpp"
#include "unicyclic/structure.hpp"

namespace unicyclic {

/// One CSV record. Empty optionals become empty cells.
struct SweepRow {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> r_prime;
  std::optional<std::size_t> t;
  std::size_t d = 0;
  std::size_t girth = 0;
  std::size_t main_bound = 0;
  std::optional<std::size_t> refined_bound;
  std::size_t count01 = 0;
  std::size_t mult1 = 0;
  std::optional<std::size_t> gamma;
  bool bound_ok = false;
  std::optional<bool> hedetniemi_ok;
};

inline constexpr std::string_view kCsvHeader =
    "family,n,r,r_prime,t,d,girth,main_bound,refined_bound,count01,mult1,"
    "gamma,bound_ok,hedetniemi_ok";

inline std::string to_csv(const SweepRow& row) {
  auto num = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  auto flag = [](const std::optional<bool>& v) {
    return v ? std::string(*v ? "true" : "false") : std::string();
  };
  std::string out = row.family;
  for (const std::string& cell :
       {std::to_string(row.n), num(row.r), num(row.r_prime), num(row.t),
        std::to_string(row.d), std::to_string(row.girth),
        std::to_string(row.main_bound), num(row.refined_bound),
        std::to_string(row.count01), std::to_string(row.mult1), num(row.gamma),
        flag(row.bound_ok), flag(row.hedetniemi_ok)})
    out += "," + cell;
  return out;
}

/// Measures g and fills the family-independent columns.
inline SweepRow measure_row(std::string family, const Graph& g,
                            std::size_t gamma_cap = 32) {
  SweepRow row;
  row.family = std::move(family);
  row.n = g.order();
  row.girth = unicyclic_decompose(g).girth();
  row.d = diameter_and_path(g).diameter;
  row.main_bound = main_lower_bound(row.d, row.girth);
  row.count01 = count_below_one(g);
  row.mult1 = multiplicity(g, 1);
  if (row.n <= gamma_cap) row.gamma = domination_number(g, gamma_cap);
  row.bound_ok = row.count01 >= row.main_bound;
  if (row.gamma) row.hedetniemi_ok = row.count01 <= *row.gamma;
  return row;
}

inline SweepRow cycle_row(std::size_t n, std::size_t gamma_cap = 32) {
  SweepRow row = measure_row("cycle", make_cycle(n), gamma_cap);
  row.r = n;
  row.refined_bound = cycle_exact_count(n);
  return row;
}

inline SweepRow lollipop_row(std::size_t n, std::size_t r,
                             std::size_t gamma_cap = 32) {
  SweepRow row = measure_row("lollipop", make_lollipop(n, r), gamma_cap);
  row.r = r;
  row.refined_bound = refined_lollipop_bound(row.d, r);
  return row;
}

inline SweepRow compass_row(const CompassParams& p, std::size_t gamma_cap = 32) {
  SweepRow row = measure_row("compass", make_compass(p), gamma_cap);
  row.r = p.r;
  row.r_prime = p.r_prime;
  row.t = p.t;
  row.refined_bound = compass_bounds(p).strengthened;
  return row;
}

/// Row for an arbitrary unicyclic graph, parameters taken from its core.
inline SweepRow report_row(std::string family, const BoundReport& rep) {
  SweepRow row;
  row.family = std::move(family);
  row.n = rep.n;
  row.d = rep.diameter;
  row.girth = rep.girth;
  if (rep.core.kind == CoreKind::Compass) {
    row.r_prime = rep.core.r_prime;
    row.t = rep.core.t;
  }
  row.r = rep.girth;
  row.main_bound = rep.main_bound;
  row.refined_bound = rep.refined_bound;
  row.count01 = rep.count01;
  row.mult1 = rep.mult1;
  row.gamma = rep.gamma;
  row.bound_ok = rep.verdicts.main_bound_ok;
  row.hedetniemi_ok = rep.verdicts.hedetniemi_ok;
  return row;
}

enum class SweepFamily { Cycle, Lollipop, Compass, Unicyclic };

inline SweepFamily parse_sweep_family(std::string_view name) {
  if (name == "cycle") return SweepFamily::Cycle;
  if (name == "lollipop") return SweepFamily::Lollipop;
  if (name == "compass") return SweepFamily::Compass;
  if (name == "unicyclic") return SweepFamily::Unicyclic;
  throw Error(ErrorKind::InvalidParameter,
              "unknown scan family '" + std::string(name) +
                  "' (cycle|lollipop|compass|unicyclic)");
}

/// Streams the header and one row per instance with n in [n_min, n_max],
/// ordered lexicographically by (n, r, r', t). The unicyclic family walks
/// the isomorphism-free enumeration.
inline void sweep(SweepFamily family, std::size_t n_min, std::size_t n_max,
                  std::ostream& out, std::size_t gamma_cap = 32) {
  if (n_min > n_max)
    throw Error(ErrorKind::InvalidParameter, "empty n range");
  out << kCsvHeader << '\n';
  auto emit = [&](const SweepRow& row) {
    out << to_csv(row) << '\n';
    if (!out) throw Error(ErrorKind::Io, "failed writing CSV row");
  };
  for (std::size_t n = n_min; n <= n_max; ++n) {
    switch (family) {
      case SweepFamily::Cycle:
        if (n >= 3) emit(cycle_row(n, gamma_cap));
        break;
      case SweepFamily::Lollipop:
        for (std::size_t r = 3; r <= n; ++r) emit(lollipop_row(n, r, gamma_cap));
        break;
      case SweepFamily::Compass:
        for (std::size_t r = 3; r + 2 <= n; ++r)
          for (std::size_t rp = 1; rp <= r / 2; ++rp)
            for (std::size_t t = 1; t + r < n; ++t)
              if (const CompassParams p{n, r, rp, t}; p.valid())
                emit(compass_row(p, gamma_cap));
        break;
      case SweepFamily::Unicyclic:
        if (n >= 3)
          enumerate_unicyclic(n, [&](const Graph& g) {
            emit(report_row("unicyclic", analyze(g, gamma_cap)));
          });
        break;
    }
  }
}

}  // namespace unicyclic
