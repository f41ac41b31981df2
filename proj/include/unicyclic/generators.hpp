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
#include <cstddef>
#include <string>

#include "unicyclic/error.hpp"
#include "unicyclic/graph.hpp"

namespace unicyclic {

/// Path v_0 - v_1 - ... - v_{n-1}.
inline Graph make_path(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidParameter, "path needs n >= 1");
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Cycle on 0..n-1 closed by the edge (0, n-1).
inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "cycle needs n >= 3");
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, n - 1);
  return g;
}

/// Lollipop C_{n,r}: the cycle occupies 0..r-1 (chord (0, r-1)) and the
/// tail r-1, r, ..., n-1 hangs off vertex r-1. Deleting the chord leaves the
/// path 0..n-1 in index order. r == n yields the plain cycle.
inline Graph make_lollipop(std::size_t n, std::size_t r) {
  if (r < 3 || r > n)
    throw Error(ErrorKind::InvalidParameter,
                "lollipop needs 3 <= r <= n (n=" + std::to_string(n) +
                    ", r=" + std::to_string(r) + ")");
  Graph g = make_cycle(r);
  for (std::size_t j = 0; j + r < n; ++j) {
    Vertex next = g.add_vertex();
    g.add_edge(next - 1, next);
  }
  return g;
}

/// Parameters of the compass C_{n,r}(r', t): a cycle of length r with a
/// tail of t vertices and a tail of s = n - r - t vertices whose cycle
/// attachment points are r' apart.
struct CompassParams {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t r_prime = 0;
  std::size_t t = 0;

  std::size_t s() const noexcept { return n - r - t; }
  std::size_t diameter() const noexcept { return r_prime + t + s(); }

  /// Cycle, offset and both tails exist.
  bool well_formed() const noexcept {
    return r >= 3 && n >= r + 2 && r_prime >= 1 && r_prime <= r / 2 &&
           t >= 1 && t + r < n;
  }

  /// Well formed and tail-to-tail is a diametral path, so the diameter is
  /// r' + t + s. That needs floor(r/2) - r' <= min(t, s); otherwise a tail
  /// end is farther from the opposite side of the cycle than from the other
  /// tail end.
  bool valid() const noexcept {
    return well_formed() && r / 2 - r_prime <= std::min(t, s());
  }

  std::string to_string() const {
    return "(n=" + std::to_string(n) + ",r=" + std::to_string(r) +
           ",r'=" + std::to_string(r_prime) + ",t=" + std::to_string(t) + ")";
  }

  friend bool operator==(const CompassParams&, const CompassParams&) = default;
};

inline void require_valid(const CompassParams& p) {
  if (!p.well_formed())
    throw Error(ErrorKind::InvalidParameter,
                "compass parameters " + p.to_string() +
                    " violate 3<=r<=n-2, 1<=r'<=r/2, t>=1, s>=1");
  if (!p.valid())
    throw Error(ErrorKind::InvalidParameter,
                "compass parameters " + p.to_string() +
                    " give diameter above r'+t+s (need r/2 - r' <= min(t,s))");
}

/// Compass layout (0-based):
///   0..t-1          tail P_t, vertex t-1 is its attachment end
///   t..t+r-1        cycle, closed by the chord (t, t+r-1)
///   t+r..n-1        tail P_s hanging off the degree-3 vertex t+r-1
/// plus the edge (t-1, t+r'-1). Vertex t+r'-1 sits r' steps from t+r-1
/// along the cycle, and 1-based label v_i is index i-1 throughout.
inline Graph make_compass_layout(const CompassParams& p) {
  if (!p.well_formed())
    throw Error(ErrorKind::InvalidParameter,
                "compass parameters " + p.to_string() + " are not well formed");
  Graph g(p.n);
  for (Vertex i = 0; i + 1 < p.t; ++i) g.add_edge(i, i + 1);
  const Vertex c0 = p.t;
  const Vertex c_last = p.t + p.r - 1;
  for (Vertex i = c0; i < c_last; ++i) g.add_edge(i, i + 1);
  g.add_edge(c0, c_last);
  for (Vertex i = c_last; i + 1 < p.n; ++i) g.add_edge(i, i + 1);
  g.add_edge(p.t - 1, p.t + p.r_prime - 1);
  return g;
}

/// The compass C_{n,r}(r', t) for valid parameters (diameter r' + t + s).
inline Graph make_compass(const CompassParams& p) {
  require_valid(p);
  return make_compass_layout(p);
}

}  // namespace unicyclic
