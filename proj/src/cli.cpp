// Copyright 2026 The degreal Authors
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

#include "degreal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "degreal/errors.hpp"
#include "degreal/mds.hpp"
#include "degreal/mm.hpp"
#include "degreal/oracle.hpp"
#include "degreal/parallel.hpp"
#include "degreal/sequence.hpp"

namespace degreal::cli {

namespace {

using json = nlohmann::ordered_json;

// I/O trouble with arguments is a usage error, not a domain one.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return read_all(f);
}

DegreeSequence load_sequence(const std::vector<std::string>& tokens, std::istream& in) {
  if (tokens.size() == 1 && tokens.front() == "-") return parse_sequence(read_all(in));
  if (tokens.size() == 1 && tokens.front().starts_with('@')) {
    return parse_sequence(read_file(tokens.front().substr(1)));
  }
  std::string text;
  for (const auto& t : tokens) text += t + " ";
  return parse_sequence(text);
}

std::vector<std::int64_t> integers_in(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t k = 0;
  while (k < text.size()) {
    if (text[k] >= '0' && text[k] <= '9') {
      std::int64_t v = 0;
      while (k < text.size() && text[k] >= '0' && text[k] <= '9') v = v * 10 + (text[k++] - '0');
      out.push_back(v);
    } else {
      ++k;
    }
  }
  return out;
}

std::vector<Edge> read_edges(const std::string& path) {
  std::istringstream all(read_file(path));
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(all, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected two vertex ids");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return edges;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::string format_matching(const std::vector<Edge>& m) {
  std::string s;
  for (auto [u, v] : m) {
    s += s.empty() ? "" : " ";
    s += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  return s;
}

struct Report {
  DegreeSequence d;
  bool graphic = false;
  std::string objective = "none";
  std::optional<int> value;
  const Realization* graph = nullptr;
  double timing_ms = 0;

  json to_json() const {
    json j;
    j["n"] = d.total_vertices();
    j["degrees"] = d.full();
    j["graphic"] = graphic;
    j["objective"] = objective;
    j["value"] = value ? json(*value) : json(nullptr);
    if (graph != nullptr) {
      json edges = json::array();
      for (auto [u, v] : graph->edges) edges.push_back({u, v});
      j["edges"] = std::move(edges);
      if (graph->certificate) {
        json cert;
        if (const auto* ds = std::get_if<DominatingSet>(&*graph->certificate)) {
          cert["type"] = "dominating-set";
          cert["members"] = ds->vertices;
        } else {
          json members = json::array();
          for (auto [u, v] : std::get<Matching>(*graph->certificate).edges) members.push_back({u, v});
          cert["type"] = "matching";
          cert["members"] = std::move(members);
        }
        j["certificate"] = std::move(cert);
      }
    }
    j["timing_ms"] = timing_ms;
    return j;
  }
};

void print_realization(std::ostream& out, const Realization& g) {
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  if (!g.certificate) return;
  if (const auto* ds = std::get_if<DominatingSet>(&*g.certificate)) {
    out << "dominating-set:";
    for (int v : ds->vertices) out << ' ' << v;
    out << '\n';
  } else {
    const auto& m = std::get<Matching>(*g.certificate).edges;
    out << "matching:" << (m.empty() ? "" : " ") << format_matching(m) << '\n';
  }
}

struct ObjectiveOptions {
  std::vector<std::string> seq;
  bool json = false;
  bool no_timing = false;
  bool checked = false;
};

int run_objective(const std::string& objective, bool realize, const ObjectiveOptions& o,
                  std::istream& in, std::ostream& out) {
  Report r;
  r.d = load_sequence(o.seq, in);
  r.objective = objective;
  r.graphic = is_graphic(r.d);
  if (!r.graphic) {
    if (!o.json) throw NotGraphicError("sequence is not graphic: " + format_sequence(r.d));
    out << r.to_json().dump() << '\n';
    return 1;
  }
  const auto start = std::chrono::steady_clock::now();
  Realization g;
  RoundingOptions opts{o.checked};
  if (realize) {
    g = objective == "mds" ? realize_mds(r.d, opts) : realize_mm(r.d, opts);
    if (const auto* ds = std::get_if<DominatingSet>(&*g.certificate)) {
      r.value = static_cast<int>(ds->vertices.size());
    } else {
      r.value = static_cast<int>(std::get<Matching>(*g.certificate).edges.size());
    }
    r.graph = &g;
  } else {
    r.value = objective == "mds" ? mds_value(r.d) : mm_value(r.d);
  }
  r.timing_ms = o.no_timing ? 0.0 : elapsed_ms(start);
  if (o.json) {
    out << r.to_json().dump() << '\n';
  } else if (realize) {
    print_realization(out, g);
  } else {
    out << *r.value << '\n';
  }
  return 0;
}

struct VerifyOptions {
  std::string seq;
  std::string edges;
  std::optional<std::string> dominating;
  std::optional<std::string> matching;
};

int run_verify(const VerifyOptions& o, std::istream& in, std::ostream& out) {
  DegreeSequence d = load_sequence({o.seq}, in);
  Realization g;
  g.n = d.total_vertices();
  g.degrees = d.full();
  g.edges = read_edges(o.edges);
  bool ok = verify_degrees(g);
  out << "degrees: " << (ok ? "ok" : "fail") << '\n';
  if (o.dominating) {
    std::vector<int> dom;
    for (auto v : integers_in(*o.dominating)) dom.push_back(static_cast<int>(v));
    bool pass = verify_dominating(g, dom);
    out << "dominating-set: " << (pass ? "ok" : "fail") << '\n';
    ok = ok && pass;
  }
  if (o.matching) {
    auto ints = integers_in(*o.matching);
    bool pass = ints.size() % 2 == 0;
    std::vector<Edge> m;
    for (std::size_t k = 0; k + 1 < ints.size(); k += 2) {
      m.emplace_back(static_cast<int>(ints[k]), static_cast<int>(ints[k + 1]));
    }
    pass = pass && verify_matching(g, m);
    out << "matching: " << (pass ? "ok" : "fail") << '\n';
    ok = ok && pass;
  }
  out << (ok ? "ok" : "fail") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Degree sequence realizations with optimal dominating sets and matchings", "degreal"};
  app.require_subcommand(1);

  std::vector<std::string> check_seq;
  auto* check = app.add_subcommand("check", "Decide whether a sequence is graphic");
  check->add_option("seq", check_seq, "Sequence, @file or - for stdin")->required();

  ObjectiveOptions obj;
  auto add_objective = [&](const std::string& name, const std::string& what) {
    auto* cmd = app.add_subcommand(name, what);
    cmd->require_subcommand(1);
    for (const char* mode : {"value", "realize"}) {
      auto* sub = cmd->add_subcommand(mode, std::string(mode) == "value" ? "Print the optimum"
                                                                       : "Print a realization and certificate");
      sub->add_option("seq", obj.seq, "Sequence, @file or - for stdin")->required();
      sub->add_flag("--json", obj.json, "Emit a JSON report");
      sub->add_flag("--no-timing", obj.no_timing, "Report timing_ms as 0");
      if (std::string(mode) == "realize") {
        sub->add_flag("--checked", obj.checked, "Verify rounding invariants after every step");
      }
    }
    return cmd;
  };
  auto* mds = add_objective("mds", "Minimum dominating set over all realizations");
  auto* mm = add_objective("mm", "Maximum matching over all realizations");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check a graph against a sequence and certificates");
  verify->add_option("--seq", ver.seq, "Sequence, @file or - for stdin")->required();
  verify->add_option("--edges", ver.edges, "Edge list file")->required();
  verify->add_option("--dominating", ver.dominating, "Dominating set, comma separated");
  verify->add_option("--matching", ver.matching, "Matching edges, e.g. 1-4,2-3");

  std::vector<std::string> oracle_seq;
  std::string objective;
  int limit = kDefaultOracleLimit;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive enumeration");
  oracle->add_option("seq", oracle_seq, "Sequence, @file or - for stdin")->required();
  oracle->add_option("--objective", objective, "mds or mm")
      ->required()
      ->check(CLI::IsMember({"mds", "mm"}));
  oracle->add_option("--limit", limit, "Largest vertex count to enumerate")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      bool g = is_graphic(load_sequence(check_seq, in));
      out << (g ? "graphic" : "not graphic") << '\n';
      return g ? 0 : 1;
    }
    for (auto [cmd, name] : {std::pair{mds, "mds"}, std::pair{mm, "mm"}}) {
      if (!cmd->parsed()) continue;
      bool realize = cmd->get_subcommand("realize")->parsed();
      return run_objective(name, realize, obj, in, out);
    }
    if (verify->parsed()) return run_verify(ver, in, out);
    if (oracle->parsed()) {
      DegreeSequence d = load_sequence(oracle_seq, in);
      out << (objective == "mds" ? par::oracle_mds(d, limit) : par::oracle_mm(d, limit)) << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace degreal::cli
