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
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "unicyclic/error.hpp"
#include "unicyclic/graph.hpp"

namespace unicyclic {

// Edge-list text format:
//   n m
//   u v        (m lines, 0 <= u < v < n)
// Lines starting with '#' and blank lines are skipped.

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

inline Graph read_edge_list(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::Parse,
                 source + ":" + std::to_string(line_no) + ": " + why);
  };
  auto next_record = [&](std::istringstream& fields) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      fields = std::istringstream(line);
      return true;
    }
    return false;
  };
  auto parse_two = [&](std::istringstream& fields, long long& a, long long& b) {
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw fail("expected two integers, got '" + line + "'");
    if (a < 0 || b < 0) throw fail("negative value in '" + line + "'");
  };

  std::istringstream fields;
  if (!next_record(fields)) throw fail("missing header line 'n m'");
  long long n = 0, m = 0;
  parse_two(fields, n, m);
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_record(fields))
      throw fail("expected " + std::to_string(m) + " edges, found " +
                 std::to_string(i));
    long long u = 0, v = 0;
    parse_two(fields, u, v);
    if (!(u < v && v < n))
      throw fail("edge '" + line + "' must satisfy 0 <= u < v < n");
    try {
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  std::istringstream trailing;
  if (next_record(trailing)) throw fail("unexpected content after the last edge");
  return g;
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
  return read_edge_list(in, path);
}

inline void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  write_edge_list(g, out);
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path + "'");
}

}  // namespace unicyclic
