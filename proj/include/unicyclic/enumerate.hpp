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
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "unicyclic/error.hpp"
#include "unicyclic/graph.hpp"

namespace unicyclic {

namespace detail {

/// Rooted unlabelled trees by order, as AHU codes "(" + sorted children + ")".
class RootedTreeTable {
 public:
  explicit RootedTreeTable(std::size_t max_order) : by_order_(max_order + 1) {
    for (std::size_t m = 1; m <= max_order; ++m) {
      std::vector<std::string> codes;
      std::vector<std::string> children;
      grow(m - 1, m - 1, kNone, children, codes);
      std::sort(codes.begin(), codes.end());
      codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
      for (auto& c : codes) {
        ids_[c] = static_cast<int>(all_.size());
        all_.push_back(c);
        by_order_[m].push_back(static_cast<int>(all_.size() - 1));
      }
    }
  }

  const std::vector<int>& of_order(std::size_t m) const { return by_order_.at(m); }
  const std::string& code(int id) const { return all_.at(static_cast<std::size_t>(id)); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Children are chosen as a non-increasing sequence of (order, id) so each
  // multiset is produced once.
  void grow(std::size_t left, std::size_t max_order, std::size_t max_pos,
            std::vector<std::string>& children, std::vector<std::string>& out) {
    if (left == 0) {
      auto sorted = children;
      std::sort(sorted.begin(), sorted.end());
      std::string code = "(";
      for (const auto& c : sorted) code += c;
      out.push_back(code + ")");
      return;
    }
    for (std::size_t m = std::min(left, max_order); m >= 1; --m) {
      const auto& pool = by_order_[m];
      const std::size_t top = (m == max_order && max_pos != kNone)
                                  ? std::min(max_pos + 1, pool.size())
                                  : pool.size();
      for (std::size_t i = 0; i < top; ++i) {
        children.push_back(all_[static_cast<std::size_t>(pool[i])]);
        grow(left - m, m, i, children, out);
        children.pop_back();
      }
    }
  }

  std::vector<std::vector<int>> by_order_;
  std::vector<std::string> all_;
  std::map<std::string, int> ids_;
};

/// Attaches the rooted tree `code` below `root`, allocating new vertices.
inline void attach_code(Graph& g, Vertex root, const std::string& code) {
  std::vector<Vertex> stack{root};
  for (std::size_t i = 1; i + 1 < code.size(); ++i) {
    if (code[i] == '(') {
      Vertex child = g.add_vertex();
      g.add_edge(stack.back(), child);
      stack.push_back(child);
    } else {
      stack.pop_back();
    }
  }
}

inline std::vector<int> dihedral_min(const std::vector<int>& seq) {
  const std::size_t r = seq.size();
  std::vector<int> best = seq, cand(r);
  for (std::size_t shift = 0; shift < r; ++shift) {
    for (std::size_t i = 0; i < r; ++i) cand[i] = seq[(shift + i) % r];
    best = std::min(best, cand);
    for (std::size_t i = 0; i < r; ++i) cand[i] = seq[(shift + r - i) % r];
    best = std::min(best, cand);
  }
  return best;
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumerationOrder = 11;

/// Visits every connected unicyclic graph on n vertices once up to
/// isomorphism: girth r, then a rooted tree per cycle position, keeping only
/// sequences that are minimal under rotation and reflection. Cycle vertices
/// are 0..r-1 in cyclic order.
template <class Visitor>
void enumerate_unicyclic(std::size_t n, Visitor&& visit,
                         std::size_t max_order = kMaxEnumerationOrder) {
  if (n < 3 || n > max_order)
    throw Error(ErrorKind::InvalidParameter,
                "enumeration needs 3 <= n <= " + std::to_string(max_order));
  const detail::RootedTreeTable table(n - 2);
  std::vector<std::size_t> order_of;  // tree id -> order
  for (std::size_t m = 1; m <= n - 2; ++m)
    for (int id : table.of_order(m)) {
      if (order_of.size() <= static_cast<std::size_t>(id)) order_of.resize(id + 1);
      order_of[static_cast<std::size_t>(id)] = m;
    }

  for (std::size_t r = 3; r <= n; ++r) {
    std::vector<int> seq;
    auto place = [&](auto&& self, std::size_t left) -> void {
      const std::size_t slots = r - seq.size();
      if (slots == 0) {
        if (left != 0 || detail::dihedral_min(seq) != seq) return;
        Graph g(r);
        for (Vertex i = 0; i < r; ++i) g.add_edge(i, (i + 1) % r);
        for (Vertex i = 0; i < r; ++i)
          detail::attach_code(g, i, table.code(seq[i]));
        visit(static_cast<const Graph&>(g));
        return;
      }
      // Each slot takes a tree of order >= 1; leave room for the rest.
      for (std::size_t m = 1; m + (slots - 1) <= left; ++m)
        for (int id : table.of_order(m)) {
          seq.push_back(id);
          self(self, left - m);
          seq.pop_back();
        }
    };
    place(place, n);
  }
}

inline std::vector<Graph> all_unicyclic(std::size_t n) {
  std::vector<Graph> out;
  enumerate_unicyclic(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// Uniform labelled tree from a random Pruefer sequence.
template <class Rng>
Graph random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorKind::InvalidParameter, "tree needs n >= 1");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  for (Vertex c : code)
    for (Vertex leaf = 0; leaf < n; ++leaf)
      if (deg[leaf] == 1) {
        g.add_edge(leaf, c);
        --deg[leaf];
        --deg[c];
        break;
      }
  Vertex a = n, b = n;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) (a == n ? a : b) = v;
  g.add_edge(a, b);
  return g;
}

/// Random tree plus one extra edge between non-adjacent vertices: a
/// connected unicyclic graph. Needs n >= 3.
template <class Rng>
Graph random_unicyclic(std::size_t n, Rng& rng) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "unicyclic needs n >= 3");
  Graph g = random_tree(n, rng);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (;;) {
    Vertex u = pick(rng), v = pick(rng);
    if (u != v && !g.has_edge(u, v)) {
      g.add_edge(u, v);
      return g;
    }
  }
}

}  // namespace unicyclic
