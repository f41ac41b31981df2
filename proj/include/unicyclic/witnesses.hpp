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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unicyclic/error.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/graph.hpp"

namespace unicyclic {

/// Integer vector v with L(G) v = eigenvalue * v, checked when built.
struct WitnessVector {
  std::vector<std::int64_t> entries;
  std::int64_t eigenvalue = 1;
  std::string provenance;
};

/// Exact residual check of L(G) v == mu v.
inline bool is_laplacian_eigenvector(const Graph& g,
                                     std::span<const std::int64_t> v,
                                     std::int64_t mu) {
  if (v.size() != g.order()) return false;
  bool nonzero = false;
  for (Vertex i = 0; i < g.order(); ++i) {
    std::int64_t lv = static_cast<std::int64_t>(g.degree(i)) * v[i];
    for (Vertex w : g.neighbors(i)) lv -= v[w];
    if (lv != mu * v[i]) return false;
    nonzero = nonzero || v[i] != 0;
  }
  return nonzero;
}

/// 1-based periodic patterns of the path and cycle eigenvectors for
/// eigenvalue 1. Both have period 6.
inline std::int64_t path_pattern(std::size_t i) {
  static constexpr std::int64_t kPattern[6] = {1, 1, 0, -1, -1, 0};  // i mod 6
  return kPattern[i % 6];
}
inline std::int64_t cycle_pattern(std::size_t i) {
  static constexpr std::int64_t kPattern[6] = {0, 1, 1, 0, -1, -1};
  return kPattern[i % 6];
}

namespace detail {

inline WitnessVector certify(const Graph& g, std::vector<std::int64_t> v,
                             std::string provenance) {
  if (!is_laplacian_eigenvector(g, v, 1))
    throw Error(ErrorKind::InternalConsistency,
                provenance + ": constructed vector fails L v = v");
  return {std::move(v), 1, std::move(provenance)};
}

inline std::vector<std::int64_t> sample(std::int64_t (*pattern)(std::size_t),
                                        std::size_t n) {
  std::vector<std::int64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = pattern(i + 1);
  return v;
}

}  // namespace detail

/// (1, 0, -1, -1, 0, 1, ...) on P_n; needs 3 | n.
inline WitnessVector path_one_vector(std::size_t n) {
  if (n == 0 || n % 3 != 0)
    throw Error(ErrorKind::InvalidParameter,
                "path eigenvector for 1 needs 3 | n, got n=" + std::to_string(n));
  return detail::certify(make_path(n), detail::sample(path_pattern, n),
                         "path P_" + std::to_string(n));
}

/// The two independent period-6 eigenvectors of C_n; needs 6 | n.
inline std::pair<WitnessVector, WitnessVector> cycle_one_vectors(std::size_t n) {
  if (n == 0 || n % 6 != 0)
    throw Error(ErrorKind::InvalidParameter,
                "cycle eigenvectors for 1 need 6 | n, got n=" + std::to_string(n));
  const Graph c = make_cycle(n);
  const std::string tag = "cycle C_" + std::to_string(n);
  return {detail::certify(c, detail::sample(path_pattern, n), tag + " (x)"),
          detail::certify(c, detail::sample(cycle_pattern, n), tag + " (y)")};
}

/// Eigenvalue-1 eigenvector of the lollipop C_{n,r} when one of the three
/// explicit constructions applies:
///   r = 0 (mod 6):              cycle pattern on the cycle, zero tail
///   r = 1 (mod 6), 3 | n:       path pattern along 0..n-1
///   r = 3 (mod 6), n = 1 (mod 3): cycle pattern on the cycle, then
///                                 -2 times the same pattern restarted on
///                                 the tail
inline std::optional<WitnessVector> lollipop_one_witness(std::size_t n,
                                                         std::size_t r) {
  if (r < 3 || r >= n)
    throw Error(ErrorKind::InvalidParameter,
                "lollipop witness needs 3 <= r < n");
  const Graph g = make_lollipop(n, r);
  const std::string tag =
      "lollipop C_{" + std::to_string(n) + "," + std::to_string(r) + "}";
  std::vector<std::int64_t> v(n, 0);
  if (r % 6 == 0) {
    for (std::size_t i = 0; i < r; ++i) v[i] = cycle_pattern(i + 1);
    return detail::certify(g, std::move(v), tag + " zero-tail");
  }
  if (r % 6 == 1 && n % 3 == 0)
    return detail::certify(g, detail::sample(path_pattern, n), tag + " path");
  if (r % 6 == 3 && n % 3 == 1) {
    for (std::size_t i = 0; i < r; ++i) v[i] = cycle_pattern(i + 1);
    for (std::size_t i = r; i < n; ++i) v[i] = -2 * cycle_pattern(i - r + 1);
    return detail::certify(g, std::move(v), tag + " folded-tail");
  }
  return std::nullopt;
}

/// Compass with r = 0 (mod 6) and r' = r/2: the cycle pattern on the cycle
/// block t..t+r-1 and zeros on both tails.
inline std::optional<WitnessVector> compass_one_witness(const CompassParams& p) {
  require_valid(p);
  if (p.r % 6 != 0 || 2 * p.r_prime != p.r) return std::nullopt;
  std::vector<std::int64_t> v(p.n, 0);
  for (std::size_t i = 0; i < p.r; ++i) v[p.t + i] = cycle_pattern(i + 1);
  return detail::certify(make_compass(p), std::move(v),
                         "compass " + p.to_string());
}

}  // namespace unicyclic
