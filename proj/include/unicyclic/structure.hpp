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
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unicyclic/error.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/graph.hpp"

namespace unicyclic {

inline constexpr std::size_t kUnreachable =
    std::numeric_limits<std::size_t>::max();

/// Single-source BFS distances; kUnreachable marks other components.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist.at(source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

struct DiametralPath {
  std::size_t diameter = 0;
  std::vector<Vertex> path;
};

/// Exact diameter by BFS from every vertex. Among endpoint pairs (u < v) at
/// distance d the lexicographically smallest pair wins, and the returned
/// u-v path is the lexicographically smallest shortest path.
inline DiametralPath diameter_and_path(const Graph& g) {
  if (g.order() == 0)
    throw Error(ErrorKind::InvalidParameter, "empty graph has no diameter");
  if (!g.is_connected())
    throw Error(ErrorKind::NotConnected, "diameter of a disconnected graph");
  std::size_t best = 0;
  Vertex best_u = 0, best_v = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (dist[v] > best) {
        best = dist[v];
        best_u = u;
        best_v = v;
      }
  }
  DiametralPath out;
  out.diameter = best;
  auto to_target = bfs_distances(g, best_v);
  Vertex cur = best_u;
  out.path.push_back(cur);
  while (cur != best_v) {
    for (Vertex w : g.neighbors(cur))  // sorted, so the first hit is smallest
      if (to_target[w] + 1 == to_target[cur]) {
        cur = w;
        break;
      }
    out.path.push_back(cur);
  }
  return out;
}

/// A tree hanging off one cycle vertex. `vertices` excludes the root and is
/// listed in BFS order from it.
struct PendantTree {
  Vertex root = 0;
  std::vector<Vertex> vertices;
};

struct UnicyclicDecomposition {
  std::vector<Vertex> cycle;  // cyclic order, starting at its smallest vertex
  std::vector<PendantTree> trees;  // only non-empty trees, by cycle position

  std::size_t girth() const noexcept { return cycle.size(); }
};

/// Peels degree-1 vertices until only the unique cycle remains.
inline UnicyclicDecomposition unicyclic_decompose(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || !g.is_connected())
    throw Error(ErrorKind::NotConnected, "unicyclic decomposition");
  if (g.size() != n)
    throw Error(ErrorKind::NotUnicyclic,
                "expected " + std::to_string(n) + " edges, found " +
                    std::to_string(g.size()));

  auto deg = g.degrees();
  std::vector<char> removed(n, 0);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
  }

  UnicyclicDecomposition out;
  Vertex start = n;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) {
      start = v;
      break;
    }
  if (start == n)
    throw Error(ErrorKind::InternalConsistency, "no cycle left after peeling");

  auto cycle_neighbors = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (Vertex w : g.neighbors(v))
      if (!removed[w]) nb.push_back(w);
    return nb;
  };
  Vertex prev = start;
  Vertex cur = cycle_neighbors(start).front();
  out.cycle.push_back(start);
  while (cur != start) {
    out.cycle.push_back(cur);
    auto nb = cycle_neighbors(cur);
    if (nb.size() != 2)
      throw Error(ErrorKind::InternalConsistency, "cycle vertex degree != 2");
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }

  std::vector<char> visited(n, 0);
  for (Vertex root : out.cycle) {
    PendantTree tree{root, {}};
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (!removed[w] || visited[w]) continue;  // cycle vertex or seen
        visited[w] = 1;
        queue.push_back(w);
        tree.vertices.push_back(w);
      }
    }
    if (!tree.vertices.empty()) out.trees.push_back(std::move(tree));
  }
  return out;
}

enum class CoreKind { Cycle, Lollipop, Compass, Other };

inline const char* to_string(CoreKind kind) {
  switch (kind) {
    case CoreKind::Cycle: return "cycle";
    case CoreKind::Lollipop: return "lollipop";
    case CoreKind::Compass: return "compass";
    case CoreKind::Other: return "other";
  }
  return "other";
}

/// Minimal unicyclic subgraph around a diametral path and what it is.
/// For Compass the tails are reported with t <= s; C_{n,r}(r',t) and
/// C_{n,r}(r',s) are the same graph.
struct CoreClassification {
  CoreKind kind = CoreKind::Other;
  std::size_t n = 0;        // core order
  std::size_t r = 0;        // girth
  std::size_t r_prime = 0;  // compass only
  std::size_t t = 0;        // compass only
  Graph core;
  std::vector<Vertex> core_vertices;  // core index -> vertex of the input
  std::vector<Vertex> diametral_path;  // in input labels
  std::size_t diameter = 0;

  std::optional<CompassParams> compass() const {
    if (kind != CoreKind::Compass) return std::nullopt;
    return CompassParams{n, r, r_prime, t};
  }
};

namespace detail {

/// Length of the tail if `tree` is a path whose end is its root, else nullopt.
inline std::optional<std::size_t> tail_length(const Graph& g,
                                              const PendantTree& tree) {
  std::size_t tree_neighbors_of_root = 0;
  for (Vertex w : g.neighbors(tree.root))
    if (std::find(tree.vertices.begin(), tree.vertices.end(), w) !=
        tree.vertices.end())
      ++tree_neighbors_of_root;
  if (tree_neighbors_of_root != 1) return std::nullopt;
  for (Vertex v : tree.vertices)
    if (g.degree(v) > 2) return std::nullopt;
  return tree.vertices.size();
}

inline std::size_t cycle_position(const std::vector<Vertex>& cycle, Vertex v) {
  return static_cast<std::size_t>(
      std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
}

}  // namespace detail

/// Reduces g to the cycle plus the chosen diametral path (plus a shortest
/// connector when the two are disjoint) and identifies the result by
/// reconstructing family parameters.
inline CoreClassification reduce_to_core(const Graph& g) {
  const auto dec = unicyclic_decompose(g);
  const auto dp = diameter_and_path(g);
  const std::size_t n = g.order();

  std::vector<char> in_core(n, 0);
  std::vector<Edge> core_edges;
  const auto& cyc = dec.cycle;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    in_core[cyc[i]] = 1;
    core_edges.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  bool touches_cycle = false;
  for (std::size_t i = 0; i < dp.path.size(); ++i) {
    touches_cycle = touches_cycle || in_core[dp.path[i]];
    if (i + 1 < dp.path.size()) core_edges.emplace_back(dp.path[i], dp.path[i + 1]);
  }
  for (Vertex v : dp.path) in_core[v] = 1;

  if (!touches_cycle) {
    // Multi-source BFS from the path; the nearest cycle vertex (smallest
    // index on ties) is joined back along parent pointers.
    std::vector<std::size_t> dist(n, kUnreachable);
    std::vector<Vertex> parent(n, n);
    std::vector<Vertex> queue(dp.path.begin(), dp.path.end());
    std::sort(queue.begin(), queue.end());
    for (Vertex v : queue) dist[v] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u))
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
    }
    Vertex target = cyc.front();
    for (Vertex c : cyc)
      if (dist[c] < dist[target] || (dist[c] == dist[target] && c < target))
        target = c;
    for (Vertex v = target; dist[v] != 0; v = parent[v]) {
      core_edges.emplace_back(v, parent[v]);
      in_core[v] = in_core[parent[v]] = 1;
    }
  }

  std::sort(core_edges.begin(), core_edges.end());
  core_edges.erase(std::unique(core_edges.begin(), core_edges.end()),
                   core_edges.end());

  CoreClassification out;
  std::vector<std::size_t> index(n, n);
  for (Vertex v = 0; v < n; ++v)
    if (in_core[v]) {
      index[v] = out.core_vertices.size();
      out.core_vertices.push_back(v);
    }
  out.core = Graph(out.core_vertices.size());
  for (const Edge& e : core_edges) out.core.add_edge(index[e.u], index[e.v]);
  out.diametral_path = dp.path;
  out.diameter = dp.diameter;
  out.n = out.core.order();

  const auto core_dec = unicyclic_decompose(out.core);
  out.r = core_dec.girth();
  std::vector<std::size_t> tails;
  for (const auto& tree : core_dec.trees) {
    auto len = detail::tail_length(out.core, tree);
    if (!len) return out;  // Other
    tails.push_back(*len);
  }
  if (tails.empty()) {
    out.kind = CoreKind::Cycle;
  } else if (tails.size() == 1) {
    out.kind = CoreKind::Lollipop;
  } else if (tails.size() == 2) {
    const auto a = detail::cycle_position(core_dec.cycle, core_dec.trees[0].root);
    const auto b = detail::cycle_position(core_dec.cycle, core_dec.trees[1].root);
    const std::size_t gap = b > a ? b - a : a - b;
    out.kind = CoreKind::Compass;
    out.r_prime = std::min(gap, out.r - gap);
    out.t = std::min(tails[0], tails[1]);
  }
  return out;
}

}  // namespace unicyclic
