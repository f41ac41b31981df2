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
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unicyclic/error.hpp"

namespace unicyclic {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Throws InvalidParameter on out-of-range endpoints, self-loops and
  /// duplicate edges.
  void add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order())
      throw Error(ErrorKind::InvalidParameter,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(order()));
    if (u == v)
      throw Error(ErrorKind::InvalidParameter,
                  "self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
      throw Error(ErrorKind::InvalidParameter,
                  "duplicate edge (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edge_count_;
  }

  void remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v))
      throw Error(ErrorKind::EdgeNotPresent,
                  "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --edge_count_;
  }

  /// Appends an isolated vertex and returns its index.
  Vertex add_vertex() {
    adj_.emplace_back();
    return adj_.size() - 1;
  }

  /// Edges in lexicographic order, each with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  Graph without_edge(Edge e) const {
    Graph g = *this;
    g.remove_edge(e.u, e.v);
    return g;
  }

  /// Deletes v; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const {
    if (v >= order())
      throw Error(ErrorKind::InvalidParameter,
                  "vertex " + std::to_string(v) + " out of range");
    Graph g(order() - 1);
    for (const Edge& e : edges()) {
      if (e.u == v || e.v == v) continue;
      g.add_edge(e.u - (e.u > v), e.v - (e.v > v));
    }
    return g;
  }

  /// Subgraph on `keep` (any order), relabelled by position in `keep`.
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<std::size_t> index(order(), order());
    for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = i;
    Graph g(keep.size());
    for (const Edge& e : edges())
      if (index[e.u] < order() && index[e.v] < order())
        g.add_edge(index[e.u], index[e.v]);
    return g;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(order());
    for (Vertex v = 0; v < order(); ++v) d[v] = adj_[v].size();
    return d;
  }

  bool is_connected() const {
    if (order() == 0) return true;
    std::vector<char> seen(order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == order();
  }

  std::size_t component_count() const {
    std::vector<char> seen(order(), 0);
    std::size_t components = 0;
    for (Vertex s = 0; s < order(); ++s) {
      if (seen[s]) continue;
      ++components;
      std::vector<Vertex> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[u])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
    }
    return components;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static void insert_sorted(std::vector<Vertex>& list, Vertex v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }
  static void erase_sorted(std::vector<Vertex>& list, Vertex v) {
    list.erase(std::lower_bound(list.begin(), list.end(), v));
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Vertex-disjoint union; vertices of b follow those of a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges())
    g.add_edge(e.u + a.order(), e.v + a.order());
  return g;
}

/// Disjoint union of a and b plus the bridge between a's vertex u and b's
/// vertex v.
inline Graph join_by_edge(const Graph& a, Vertex u, const Graph& b,
                          Vertex v) {
  if (u >= a.order() || v >= b.order())
    throw Error(ErrorKind::InvalidParameter, "join vertex out of range");
  Graph g = disjoint_union(a, b);
  g.add_edge(u, a.order() + v);
  return g;
}

}  // namespace unicyclic
