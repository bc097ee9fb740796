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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "degreal/cli.hpp"
#include "golden.hpp"

using degreal::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("degreal_test_" + name);
  std::ofstream(p) << content;
  return p;
}

// Splits realize output into the edge lines and the certificate line.
std::pair<std::string, std::string> split_certificate(const std::string& out) {
  auto pos = out.rfind('\n', out.size() - 2);
  pos = pos == std::string::npos ? 0 : pos + 1;
  return {out.substr(0, pos), out.substr(pos)};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented examples") {
    auto r = call({"check", "4 3 2 1 1"});
    CHECK(r.code == 1);
    CHECK(r.out == "not graphic\n");
    r = call({"mds", "value", "2 2 2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = call({"mm", "realize", "1 1"});
    CHECK(r.out == "1 2\nmatching: (1,2)\n");
  }

  TEST_CASE("sequence sources") {
    CHECK(call({"check", "-"}, "2 2\n2").out == "graphic\n");
    auto p = temp_file("seq.txt", "3 3 3 3\n");
    CHECK(call({"mm", "value", "@" + p.string()}).out == "2\n");
    auto missing = call({"check", "@/nonexistent/degreal/seq"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"mds"}).code == 2);
    CHECK(call({"oracle", "2 2 2", "--objective", "mvc"}).code == 2);
    CHECK(call({"check", "1 -1"}).code == 1);
    auto r = call({"mds", "value", "3 1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("not graphic") != std::string::npos);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("realize output passes verify") {
    for (const char* seq : {"4 3 2 2 1", "3 3 2 2 2 2 1 1", "5 5 4 3 3 2 2 1 1 0", "2 2 2 2 2 2 2"}) {
      auto r = call({"mds", "realize", seq});
      REQUIRE(r.code == 0);
      auto [edges, cert] = split_certificate(r.out);
      auto p = temp_file("mds_edges.txt", "# realize output\n" + edges);
      auto v = call({"verify", "--seq", seq, "--edges", p.string(), "--dominating",
                     cert.substr(cert.find(':') + 1)});
      CHECK(v.code == 0);
      CHECK(v.out.find("fail") == std::string::npos);

      r = call({"mm", "realize", seq});
      REQUIRE(r.code == 0);
      std::tie(edges, cert) = split_certificate(r.out);
      p = temp_file("mm_edges.txt", edges);
      v = call({"verify", "--seq", seq, "--edges", p.string(), "--matching",
                cert.substr(cert.find(':') + 1)});
      CHECK(v.code == 0);
    }
  }

  TEST_CASE("verify catches bad input") {
    auto p = temp_file("edges.txt", "1 2\n1 3  # middle\n\n2 4\n");
    CHECK(call({"verify", "--seq", "2 2 1 1", "--edges", p.string()}).code == 0);
    CHECK(call({"verify", "--seq", "2 2 1 1", "--edges", p.string(), "--dominating", "2,3"}).code == 0);
    auto r = call({"verify", "--seq", "2 2 1 1", "--edges", p.string(), "--dominating", "1"});
    CHECK(r.code == 1);
    CHECK(r.out == "degrees: ok\ndominating-set: fail\nfail\n");
    CHECK(call({"verify", "--seq", "2 2 1 1", "--edges", p.string(), "--matching", "1-3,2-4"}).code == 0);
    CHECK(call({"verify", "--seq", "2 2 1 1", "--edges", p.string(), "--matching", "1-2,2-3"}).code == 1);
    CHECK(call({"verify", "--seq", "2 2 2", "--edges", p.string()}).code == 1);
    auto bad = temp_file("bad.txt", "1 2 3\n");
    CHECK(call({"verify", "--seq", "1 1", "--edges", bad.string()}).code == 1);
    CHECK(call({"verify", "--seq", "1 1", "--edges", "/nonexistent/edges"}).code == 2);
  }

  TEST_CASE("json report") {
    auto r = call({"mm", "value", "3 3 3 3", "--json", "--no-timing"});
    CHECK(r.out ==
          "{\"n\":4,\"degrees\":[3,3,3,3],\"graphic\":true,\"objective\":\"mm\",\"value\":2,"
          "\"timing_ms\":0.0}\n");
    r = call({"mds", "realize", "2 2 2", "--json"});
    CHECK(r.out.find("\"timing_ms\":") != std::string::npos);
  }

  TEST_CASE("golden cases") {
    auto cases = degreal::testing::load_golden_cases(DEGREAL_GOLDEN_DIR);
    CHECK(cases.size() >= 20);
    for (const auto& c : cases) {
      CAPTURE(c.name);
      auto r = call(c.args);
      CHECK(r.code == c.exit_code);
      CHECK(r.out == c.expected);
    }
  }
}
