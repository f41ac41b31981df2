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

// Command-line front end: generate, analyze, verify and scan.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "unicyclic/unicyclic.hpp"

using namespace unicyclic;

namespace {

Graph generate(const std::string& family, std::size_t n, std::optional<std::size_t> r,
               std::optional<std::size_t> rp, std::optional<std::size_t> t) {
  auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
    if (!v)
      throw Error(ErrorKind::InvalidParameter,
                  "family '" + family + "' needs " + flag);
    return *v;
  };
  if (family == "path") return make_path(n);
  if (family == "cycle") return make_cycle(n);
  if (family == "lollipop") return make_lollipop(n, need(r, "--r"));
  if (family == "compass")
    return make_compass({n, need(r, "--r"), need(rp, "--rp"), need(t, "--t")});
  throw Error(ErrorKind::InvalidParameter,
              "unknown family '" + family + "' (path|cycle|lollipop|compass)");
}

nlohmann::ordered_json row_json(const SweepRow& row) {
  auto opt = [](const auto& v) -> nlohmann::ordered_json {
    if (v) return *v;
    return nullptr;
  };
  return {{"family", row.family},
          {"n", row.n},
          {"r", opt(row.r)},
          {"r_prime", opt(row.r_prime)},
          {"t", opt(row.t)},
          {"d", row.d},
          {"girth", row.girth},
          {"main_bound", row.main_bound},
          {"refined_bound", opt(row.refined_bound)},
          {"count01", row.count01},
          {"mult1", row.mult1},
          {"gamma", opt(row.gamma)},
          {"bound_ok", row.bound_ok},
          {"hedetniemi_ok", opt(row.hedetniemi_ok)}};
}

void print_table(const BoundReport& rep) {
  auto line = [](const std::string& key, const std::string& value) {
    std::cout << std::left << std::setw(16) << key << value << '\n';
  };
  auto num = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  auto flag = [](const std::optional<bool>& v) {
    return v ? std::string(*v ? "yes" : "NO") : std::string("-");
  };
  std::string core = to_string(rep.core.kind);
  if (rep.core.kind == CoreKind::Lollipop)
    core += " n=" + std::to_string(rep.core.n) + " r=" + std::to_string(rep.core.r);
  if (auto p = rep.core.compass()) core += " " + p->to_string();
  line("vertices", std::to_string(rep.n));
  line("girth", std::to_string(rep.girth));
  line("diameter", std::to_string(rep.diameter));
  line("core", core);
  line("count [0,1)", std::to_string(rep.count01));
  line("mult(1)", std::to_string(rep.mult1));
  line("domination", num(rep.gamma));
  line("main bound", std::to_string(rep.main_bound));
  line("refined bound", num(rep.refined_bound));
  line("alpha", num(rep.alpha));
  line("main ok", flag(rep.verdicts.main_bound_ok));
  line("refined ok", flag(rep.verdicts.refined_bound_ok));
  line("hedetniemi ok", flag(rep.verdicts.hedetniemi_ok));
  line("chain ok", flag(rep.verdicts.chain_ok));
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const auto lo = std::stoul(a, &used_a), hi = std::stoul(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidParameter, "range must look like A..B, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian eigenvalue counts in [0,1) for unicyclic graphs"};
  app.require_subcommand(1);

  std::string family, output, input, suite, range;
  std::size_t n = 0;
  std::optional<std::size_t> r, rp, t, max_n;
  std::uint64_t seed = 0;
  bool as_json = false;

  auto* gen = app.add_subcommand("gen", "write a family graph as an edge list");
  gen->add_option("--family", family, "path|cycle|lollipop|compass")->required();
  gen->add_option("--n", n, "number of vertices")->required();
  gen->add_option("--r", r, "girth");
  gen->add_option("--rp", rp, "cycle offset of the second tail (compass)");
  gen->add_option("--t", t, "length of the first tail (compass)");
  gen->add_option("-o,--output", output, "edge-list file")->required();

  auto* an = app.add_subcommand("analyze", "exact counts and bounds for an edge list");
  an->add_option("file", input, "edge-list file")->required();
  an->add_flag("--json", as_json, "emit one JSON object");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "suite name")->required();
  ver->add_option("--max-n", max_n, "largest order to check");
  ver->add_option("--seed", seed, "seed for randomized suites");

  auto* scan = app.add_subcommand("scan", "CSV sweep over a family");
  scan->add_option("--family", family, "cycle|lollipop|compass|unicyclic")->required();
  scan->add_option("--n-range", range, "A..B")->required();
  scan->add_option("--out", output, "CSV file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      write_edge_list_file(generate(family, n, r, rp, t), output);
      return 0;
    }
    if (*an) {
      const auto g = read_edge_list_file(input);
      const auto rep = analyze(g);
      if (as_json) {
        std::cout << row_json(report_row("input", rep)).dump(2) << '\n';
      } else {
        print_table(rep);
      }
      return 0;
    }
    if (*ver) {
      const auto report = run_suite(suite, {max_n, seed});
      std::cout << report.suite << ": " << report.instances << " instances, "
                << report.failures.size() << " failures, " << std::fixed
                << std::setprecision(2) << report.wall_seconds << "s\n";
      for (const auto& f : report.failures) std::cout << "  FAIL " << f << '\n';
      return report.passed() ? 0 : 1;
    }
    if (*scan) {
      const auto [lo, hi] = parse_range(range);
      const auto fam = parse_sweep_family(family);
      if (output.empty()) {
        sweep(fam, lo, hi, std::cout);
      } else {
        std::ofstream out(output);
        if (!out) throw Error(ErrorKind::Io, "cannot open '" + output + "' for writing");
        sweep(fam, lo, hi, out);
        out.flush();
        if (!out) throw Error(ErrorKind::Io, "failed writing '" + output + "'");
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
