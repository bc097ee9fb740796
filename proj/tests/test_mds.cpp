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

#include <random>
#include <set>
#include <tuple>

#include "degreal/errors.hpp"
#include "degreal/mds.hpp"
#include "degreal/oracle.hpp"
#include "support.hpp"

using namespace degreal;

namespace {

using ArcKey = std::tuple<NodeRole, int, NodeRole, int, std::int64_t>;

std::set<ArcKey> arc_keys(const FlowNetwork& net) {
  std::set<ArcKey> out;
  for (const Arc& a : net.arcs()) {
    out.emplace(net.label(a.from).role, net.label(a.from).index, net.label(a.to).role,
                net.label(a.to).index, a.capacity);
  }
  return out;
}

bool some_realization_prefix_dominated(const DegreeSequence& d, int gamma) {
  std::vector<int> dom;
  for (int i = 1; i <= gamma; ++i) dom.push_back(i);
  bool found = false;
  for_each_realization(d, [&](const Realization& g) {
    found = verify_dominating(g, dom);
    return !found;
  });
  return found;
}

BipartiteRealization solve(const DegreeSequence& d, int gamma) {
  FlowNetwork net = build_mds_flow(d, gamma);
  return extract_bipartite_mds(d, gamma, net, max_flow(net));
}

}  // namespace

TEST_SUITE("mds") {
  TEST_CASE("feasibility examples") {
    CHECK(mds_feasible(parse_sequence("2 2 2"), 1));
    CHECK_FALSE(mds_feasible(parse_sequence("1 1 1 1"), 1));
    CHECK_FALSE(mds_feasible(parse_sequence("2 2 1 1"), 1));
    CHECK(mds_feasible(parse_sequence("2 2 1 1"), 2));
    CHECK_FALSE(some_realization_prefix_dominated(parse_sequence("2 2 1 1"), 1));
    CHECK(some_realization_prefix_dominated(parse_sequence("2 2 1 1"), 2));
    CHECK_FALSE(mds_feasible(parse_sequence("2 2 2"), 0));
    CHECK_FALSE(mds_feasible(parse_sequence("2 2 1"), 3));
    CHECK_THROWS_AS(mds_feasible(parse_sequence("2 2 2"), 4), DomainError);
    CHECK_THROWS_AS(mds_feasible(parse_sequence("2 2 2"), -1), DomainError);
  }

  TEST_CASE("values") {
    CHECK(mds_value(parse_sequence("4 3 2 2 1")) == 1);
    CHECK(mds_value(parse_sequence("1 1 1 1")) == 2);
    auto d = parse_sequence("2 2 1 1 1 1");
    CHECK(mds_value(d) == oracle_mds(d));
    CHECK(mds_value(d) == 2);
    CHECK(mds_value(parse_sequence("2 2 2 0")) == 2);
    CHECK(mds_value(parse_sequence("0")) == 1);
    CHECK_THROWS_AS(mds_value(parse_sequence("4 3 1 1 1")), NotGraphicError);
  }

  TEST_CASE("feasibility agrees with prefix-dominated realizations (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& d : testing::graphic_sequences(n)) {
        for (int g = 1; g <= n; ++g) {
          CHECK(mds_feasible(d, g) == some_realization_prefix_dominated(d, g));
        }
      }
    }
  }

  TEST_CASE("feasibility is monotone in gamma") {
    for (int n = 1; n <= 8; ++n) {
      for (const auto& d : testing::graphic_sequences(n)) {
        for (int g = 0; g < n; ++g) {
          if (mds_feasible(d, g)) CHECK(mds_feasible(d, g + 1));
        }
      }
    }
  }

  TEST_CASE("flow network for gamma = n has no supplementary nodes") {
    auto d = parse_sequence("2 2 2");
    auto net = build_mds_flow(d, 3);
    std::set<ArcKey> want;
    for (int i = 1; i <= 3; ++i) want.emplace(NodeRole::Source, 0, NodeRole::XD, i, 2);
    for (int j = 1; j <= 3; ++j) want.emplace(NodeRole::YD, j, NodeRole::Sink, 0, 2);
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        if (i != j) want.emplace(NodeRole::XD, i, NodeRole::YD, j, 1);
      }
    }
    CHECK(arc_keys(net) == want);
    CHECK(net.node_count() == 8);
  }

  TEST_CASE("flow network for gamma = 1") {
    auto d = parse_sequence("2 2 2");
    auto keys = arc_keys(build_mds_flow(d, 1));
    CHECK(keys.count({NodeRole::XS, 2, NodeRole::XSPrime, 2, 1}) == 1);
    CHECK(keys.count({NodeRole::YSPrime, 3, NodeRole::YS, 3, 1}) == 1);
    CHECK(keys.count({NodeRole::XSPrime, 2, NodeRole::YSPrime, 3, 1}) == 1);
    CHECK(keys.count({NodeRole::XSPrime, 2, NodeRole::YSPrime, 2, 1}) == 0);
    CHECK(keys.count({NodeRole::XS, 2, NodeRole::YS, 3, 1}) == 0);
    CHECK(keys.count({NodeRole::XD, 1, NodeRole::YS, 3, 1}) == 1);
    CHECK(max_flow(build_mds_flow(d, 1)).value == 6);
    CHECK_THROWS_AS(build_mds_flow(d, 0), DomainError);
    CHECK_THROWS_AS(build_mds_flow(d, 4), DomainError);
  }

  TEST_CASE("arc count by family") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
      auto d = testing::random_graphic(2 + static_cast<int>(rng() % 12), rng);
      const int n = d.n();
      for (int g = 1; g <= n; ++g) {
        const std::size_t s = static_cast<std::size_t>(n - g);
        const std::size_t gg = static_cast<std::size_t>(g);
        std::size_t want = static_cast<std::size_t>(2 * n)  // source and sink arcs
                           + gg * (gg - 1)                    // inside the prefix
                           + 2 * gg * s                       // across the prefix boundary
                           + 2 * s                            // x_i -> x'_i, y'_j -> y_j
                           + s * (s == 0 ? 0 : s - 1);        // x'_i -> y'_j
        CHECK(build_mds_flow(d, g).arcs().size() == want);
      }
    }
  }

  TEST_CASE("extraction") {
    auto bip = solve(parse_sequence("2 2 2"), 3);
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) CHECK(bip.at(i, j) == (i != j));
    }
    auto d4 = parse_sequence("1 1 1 1");
    auto net = build_mds_flow(d4, 1);
    auto f = max_flow(net);
    CHECK(f.value < d4.sum());
    CHECK_THROWS_AS(extract_bipartite_mds(d4, 1, net, f), InfeasibleError);
    auto d5 = parse_sequence("3 2 2 2 1");
    CHECK(solve(d5, mds_prefix(d5)).valid());
    CHECK_NOTHROW(extract_bipartite_mds(d5, 2, max_flow(build_mds_flow(d5, 2))));
  }

  TEST_CASE("rounding a symmetric matrix is immediate") {
    BipartiteRealization bip({2, 2, 2}, MdsMode{1});
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) bip.set(i, j, i != j);
    }
    RoundingStats st;
    auto g = round_bipartite_mds(bip, {true}, &st);
    CHECK(g.edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(std::get<DominatingSet>(*g.certificate).vertices == std::vector<int>{1});
    CHECK(st.mr1 + st.mr2 + st.mr3 + st.even_cycles + st.delta_cycles + st.plain_cycles == 0);
  }

  TEST_CASE("rounding the path") {
    auto d = parse_sequence("2 2 1 1");
    auto g = round_bipartite_mds(solve(d, 2), {true});
    CHECK(verify_degrees(g));
    CHECK(verify_dominating(g, std::vector<int>{1, 2}));
  }

  TEST_CASE("rounding rejects broken input") {
    BipartiteRealization diag({1, 1}, MdsMode{1});
    diag.set(1, 1, true);
    diag.set(2, 2, true);
    CHECK_THROWS_AS(round_bipartite_mds(diag), ContractError);
    BipartiteRealization undominated({1, 1, 1, 1}, MdsMode{1});
    undominated.set(1, 2, true);
    undominated.set(2, 1, true);
    undominated.set(3, 4, true);
    undominated.set(4, 3, true);
    CHECK_THROWS_AS(round_bipartite_mds(undominated), ContractError);
    BipartiteRealization mm({1, 1}, MmMode{1});
    CHECK_THROWS_AS(round_bipartite_mds(mm), ContractError);
  }

  TEST_CASE("rounding every feasible pair up to n = 6 in checked mode") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& d : testing::graphic_sequences(n)) {
        for (int g = 1; g <= n; ++g) {
          if (!mds_feasible(d, g)) continue;
          auto bip = solve(d, g);
          RoundingStats st;
          auto out = round_bipartite_mds(bip, {true}, &st);
          CHECK(out.degrees == std::vector<int>(bip.degrees().begin(), bip.degrees().end()));
          CHECK(verify_degrees(out));
          std::vector<int> dom;
          for (int i = 1; i <= g; ++i) dom.push_back(i);
          CHECK(verify_dominating(out, dom));
          CHECK(st.checks >= n);
        }
      }
    }
  }

  TEST_CASE("realize examples") {
    auto g = realize_mds(parse_sequence("2 2 2"));
    CHECK(g.edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(std::get<DominatingSet>(*g.certificate).vertices == std::vector<int>{1});
    g = realize_mds(parse_sequence("4 3 2 2 1"));
    CHECK(verify_degrees(g));
    CHECK(std::get<DominatingSet>(*g.certificate).vertices == std::vector<int>{1});
    g = realize_mds(parse_sequence("1 1 0 0"));
    CHECK(g.n == 4);
    CHECK(verify_degrees(g));
    CHECK(std::get<DominatingSet>(*g.certificate).vertices == std::vector<int>{1, 3, 4});
    g = realize_mds(parse_sequence("0"));
    CHECK(std::get<DominatingSet>(*g.certificate).vertices == std::vector<int>{1});
    CHECK_THROWS_AS(realize_mds(parse_sequence("3 3 1 1")), NotGraphicError);
  }

  TEST_CASE("random realizations up to n = 60 in checked mode") {
    std::mt19937_64 rng(17);
    RoundingStats total;
    for (int t = 0; t < 150; ++t) {
      auto d = testing::random_graphic(2 + static_cast<int>(rng() % 59), rng);
      RoundingStats st;
      auto g = realize_mds(d, {true}, &st);
      CHECK(verify_degrees(g));
      const auto& dom = std::get<DominatingSet>(*g.certificate).vertices;
      CHECK(verify_dominating(g, dom));
      CHECK(static_cast<int>(dom.size()) == mds_value(d));
      total.mr1 += st.mr1;
      total.mr2 += st.mr2;
      total.mr3 += st.mr3;
      total.disjoint_pairs += st.disjoint_pairs;
    }
    MESSAGE("MR1/MR2/MR3 applications: " << total.mr1 << "/" << total.mr2 << "/" << total.mr3
                                          << ", disjoint pairs " << total.disjoint_pairs);
  }

  TEST_CASE("verify_dominating examples") {
    auto tri = make_realization(3, {{1, 2}, {1, 3}, {2, 3}}, {2, 2, 2});
    CHECK(verify_dominating(tri, std::vector<int>{1}));
    auto two = make_realization(4, {{1, 2}, {3, 4}}, {1, 1, 1, 1});
    CHECK_FALSE(verify_dominating(two, std::vector<int>{1}));
    auto p4 = make_realization(4, {{1, 2}, {2, 3}, {3, 4}}, {1, 2, 2, 1});
    CHECK(verify_dominating(p4, std::vector<int>{2, 3}));
    CHECK_FALSE(verify_dominating(p4, std::vector<int>{9}));
  }
}
