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

#include "degreal/mds.hpp"

#include <algorithm>
#include <string>

#include "degreal/errors.hpp"

namespace degreal {

bool mds_feasible(const DegreeSequence& d, int gamma) {
  const int n = d.n();
  if (gamma < 0 || gamma > n) throw DomainError("gamma out of range");
  if (d.sum() % 2 != 0) return false;
  if (n == 0) return true;
  if (!is_graphic(d)) return false;
  detail::SortedSums s(d.values());
  const std::int64_t head = s.sum(1, gamma);
  const int rest = n - gamma;
  auto kk = [](std::int64_t k) { return k * (k - 1); };

  // every nondominating vertex needs an edge into the prefix
  for (int k = 0; k <= rest; ++k) {
    std::int64_t lhs = s.sum(gamma + 1, gamma + k) - k;
    std::int64_t rhs = kk(k) - rest + head + s.sum_min(gamma + k + 1, n, k, 1);
    if (lhs > rhs) return false;
  }
  const int top = static_cast<int>(std::min<std::int64_t>(d.max_degree(), rest));
  for (int k = 0; k <= top; ++k) {
    std::int64_t lhs = s.sum(gamma + 1, gamma + k);
    std::int64_t rhs = kk(k) + s.sum_min(1, gamma, k, 0) + s.sum_min(gamma + k + 1, n, k, 1);
    if (lhs > rhs) return false;
  }
  return true;
}

int mds_prefix(const DegreeSequence& d) {
  if (!is_graphic(d)) throw NotGraphicError("sequence is not graphic: " + format_sequence(d));
  if (d.n() == 0) return 0;
  // feasibility is monotone in gamma and gamma = n always works
  int lo = 1, hi = d.n();
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (mds_feasible(d, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

int mds_value(const DegreeSequence& d) { return mds_prefix(d) + d.zero_count(); }

FlowNetwork build_mds_flow(const DegreeSequence& d, int gamma) {
  const int n = d.n();
  if (gamma < 1 || gamma > n) throw DomainError("gamma out of range");
  FlowNetwork net;
  std::vector<int> x(static_cast<std::size_t>(n) + 1), y(x), xp(x), yp(x);
  for (int i = 1; i <= n; ++i) x[static_cast<std::size_t>(i)] = net.add_node(i <= gamma ? NodeRole::XD : NodeRole::XS, i);
  for (int j = 1; j <= n; ++j) y[static_cast<std::size_t>(j)] = net.add_node(j <= gamma ? NodeRole::YD : NodeRole::YS, j);
  for (int i = gamma + 1; i <= n; ++i) xp[static_cast<std::size_t>(i)] = net.add_node(NodeRole::XSPrime, i);
  for (int j = gamma + 1; j <= n; ++j) yp[static_cast<std::size_t>(j)] = net.add_node(NodeRole::YSPrime, j);

  for (int i = 1; i <= n; ++i) net.add_arc(net.source(), x[static_cast<std::size_t>(i)], d[i]);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && (i <= gamma || j <= gamma)) {
        net.add_arc(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)], 1);
      }
    }
    if (i > gamma) net.add_arc(x[static_cast<std::size_t>(i)], xp[static_cast<std::size_t>(i)], d[i] - 1);
  }
  for (int i = gamma + 1; i <= n; ++i) {
    for (int j = gamma + 1; j <= n; ++j) {
      if (i != j) net.add_arc(xp[static_cast<std::size_t>(i)], yp[static_cast<std::size_t>(j)], 1);
    }
  }
  for (int j = gamma + 1; j <= n; ++j) net.add_arc(yp[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(j)], d[j] - 1);
  for (int j = 1; j <= n; ++j) net.add_arc(y[static_cast<std::size_t>(j)], net.sink(), d[j]);
  return net;
}

BipartiteRealization extract_bipartite_mds(const DegreeSequence& d, int gamma,
                                           const FlowNetwork& net, const FlowAssignment& f) {
  if (f.flow.size() != net.arcs().size()) throw DomainError("flow does not match network");
  if (f.value < d.sum()) {
    throw InfeasibleError("no " + std::to_string(gamma) + "-prefix-dominated realization (flow " +
                          std::to_string(f.value) + " < " + std::to_string(d.sum()) + ")");
  }
  BipartiteRealization bip(std::vector<int>(d.values().begin(), d.values().end()), MdsMode{gamma});
  auto is_x = [](NodeRole r) { return r == NodeRole::XD || r == NodeRole::XS; };
  auto is_y = [](NodeRole r) { return r == NodeRole::YD || r == NodeRole::YS; };
  for (std::size_t a = 0; a < f.flow.size(); ++a) {
    if (f.flow[a] != 1) continue;
    const Arc& arc = net.arcs()[a];
    const NodeLabel& from = net.label(arc.from);
    const NodeLabel& to = net.label(arc.to);
    bool middle = (is_x(from.role) && is_y(to.role)) ||
                  (from.role == NodeRole::XSPrime && to.role == NodeRole::YSPrime);
    if (middle) bip.set(from.index, to.index, true);
  }
  try {
    bip.check();
  } catch (const ContractError& e) {
    throw InternalError(std::string("extracted realization is broken: ") + e.what());
  }
  return bip;
}

BipartiteRealization extract_bipartite_mds(const DegreeSequence& d, int gamma,
                                           const FlowAssignment& f) {
  return extract_bipartite_mds(d, gamma, build_mds_flow(d, gamma), f);
}

namespace {

using Checker = detail::InvariantChecker;

std::vector<int> prefix_half_neighbors(const HalfIntegralGraph& g, int v, int gamma) {
  std::vector<int> out;
  for (int u : g.half_neighbors(v)) {
    if (u > gamma) break;
    out.push_back(u);
  }
  return out;
}

// Finds one 2-dom path P[a, s, b, c] through s and rewrites it. The rule is
// picked by the weight of (a, c).
bool reroute_once(HalfIntegralGraph& g, int s, int gamma, Checker& check, RoundingStats& stats) {
  std::vector<int> dom = prefix_half_neighbors(g, s, gamma);
  if (dom.size() < 2) return false;
  for (int b : dom) {
    for (int a : dom) {
      if (a == b) continue;
      for (int c : g.half_neighbors(b)) {
        if (c == a || c == s) continue;
        switch (g.weight(a, c)) {
          case 0:
            g.set_weight(a, s, 0);
            g.set_weight(s, b, 2);
            g.set_weight(b, c, 0);
            g.set_weight(a, c, 1);
            ++stats.mr1;
            break;
          case 1:
            g.set_weight(a, s, 2);
            g.set_weight(s, b, 0);
            g.set_weight(b, c, 2);
            g.set_weight(a, c, 0);
            ++stats.mr2;
            break;
          default:
            g.set_weight(a, s, 2);
            g.set_weight(s, b, 0);
            g.set_weight(b, c, 2);
            g.set_weight(a, c, 1);
            ++stats.mr3;
            break;
        }
        check.touched({a, s, b, c});
        return true;
      }
    }
  }
  return false;
}

std::vector<int> distinct_sorted(const Cycle& c, bool skip_anchor) {
  std::vector<int> v = c.walk;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (skip_anchor) v.erase(std::remove(v.begin(), v.end(), c.anchor), v.end());
  return v;
}

int shared_vertex(const Cycle& a, const Cycle& b) {
  std::vector<int> x = distinct_sorted(a, false), y = distinct_sorted(b, false), out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  if (out.size() > 1) throw InternalError("odd cycles share more than one vertex");
  return out.empty() ? 0 : out.front();
}

}  // namespace

Realization round_bipartite_mds(const BipartiteRealization& bip, const RoundingOptions& opts,
                                RoundingStats* stats_out) {
  const auto* mode = std::get_if<MdsMode>(&bip.mode());
  if (mode == nullptr) throw ContractError("expected a prefix-dominated realization");
  bip.check();
  const int n = bip.n();
  const int gamma = mode->gamma;
  RoundingStats stats;
  HalfIntegralGraph g = HalfIntegralGraph::from_bipartite(bip);
  Checker check(g, Checker::Mode::Mds, gamma, opts.checked, stats);
  check.all();

  // Step 3. Later reroutes never recreate a path at an earlier s, so the
  // second sweep only confirms.
  for (bool changed = true; changed;) {
    changed = false;
    for (int s = gamma + 1; s <= n; ++s) {
      while (reroute_once(g, s, gamma, check, stats)) changed = true;
    }
  }

  // Step 4
  std::set<Edge> anchored;  // E'
  std::set<Edge> delta_edges;
  std::vector<Cycle> cycles;
  for (int s = gamma + 1; s <= n; ++s) {
    int full = 0;
    for (int x = 1; x <= gamma && full == 0; ++x) {
      if (g.weight(s, x) == 2) full = x;
    }
    if (full != 0) {
      anchored.insert(make_edge(s, full));
      continue;
    }
    std::vector<int> dom = prefix_half_neighbors(g, s, gamma);
    if (dom.size() != 2) throw InternalError("vertex " + std::to_string(s) + " has no delta triangle");
    int a = dom[0], b = dom[1];
    if (g.weight(a, b) != 1 || g.half_neighbors(a).size() != 2 || g.half_neighbors(b).size() != 2) {
      throw InternalError("2-dom path left at " + std::to_string(s));
    }
    Cycle c;
    c.walk = {s, a, b};
    c.kind = CycleKind::Delta;
    c.anchor = s;
    delta_edges.insert({make_edge(a, s), make_edge(s, b), make_edge(a, b)});
    cycles.push_back(std::move(c));
    ++stats.delta_cycles;
  }

  // Step 5
  for (Cycle& c : euler_partition(g, delta_edges)) {
    cycles.push_back(std::move(c));
    ++stats.plain_cycles;
  }

  // Step 6
  std::vector<Cycle> odd;
  for (Cycle& c : cycles) {
    if (c.odd()) {
      odd.push_back(std::move(c));
      continue;
    }
    alternate(g, c, 0, 2);
    check.touched(c.walk);
    ++stats.even_cycles;
  }

  // Step 7
  if (odd.size() % 2 != 0) throw InternalError("odd number of odd cycles");
  std::sort(odd.begin(), odd.end(),
            [](const Cycle& p, const Cycle& q) { return p.min_vertex() < q.min_vertex(); });
  for (std::size_t k = 0; k < odd.size(); k += 2) {
    const Cycle& c1 = odd[k];
    const Cycle& c2 = odd[k + 1];
    if (int s = shared_vertex(c1, c2); s != 0) {
      if (c1.kind == c2.kind) throw InternalError("intersecting odd cycles of the same kind");
      const Cycle& delta = c1.kind == CycleKind::Delta ? c1 : c2;
      const Cycle& plain = c1.kind == CycleKind::Delta ? c2 : c1;
      if (delta.anchor != s) throw InternalError("odd cycles meet away from the anchor");
      alternate(g, delta.rotated_to(s), 2, 0);
      alternate(g, plain.rotated_to(s), 0, 2);
      check.touched(delta.walk);
      check.touched(plain.walk);
      ++stats.intersecting_pairs;
      continue;
    }
    std::vector<int> xs = distinct_sorted(c1, c1.kind == CycleKind::Delta);
    std::vector<int> ys = distinct_sorted(c2, c2.kind == CycleKind::Delta);
    int x = 0, y = 0;
    for (int u : xs) {
      for (int v : ys) {
        if (anchored.count(make_edge(u, v)) == 0) {
          x = u;
          y = v;
          break;
        }
      }
      if (x != 0) break;
    }
    if (x == 0) throw InternalError("no joining edge between odd cycles");
    const int xi = g.weight(x, y);
    if (xi == 1) throw InternalError("joining edge has half weight");
    g.set_weight(x, y, 2 - xi);
    alternate(g, c1.rotated_to(x), xi, 2 - xi);
    alternate(g, c2.rotated_to(y), xi, 2 - xi);
    check.touched(c1.walk);
    check.touched(c2.walk);
    ++stats.disjoint_pairs;
  }
  if (g.half_edge_count() != 0) throw InternalError("half-weight edges remain");
  check.all();

  // Step 8
  std::vector<int> degrees(bip.degrees().begin(), bip.degrees().end());
  Realization out = make_realization(n, g.full_edges(), std::move(degrees));
  DominatingSet dom;
  for (int i = 1; i <= gamma; ++i) dom.vertices.push_back(i);
  if (!verify_degrees(out) || !verify_dominating(out, dom.vertices)) {
    throw InternalError("rounded graph fails verification");
  }
  out.certificate = std::move(dom);
  if (stats_out != nullptr) *stats_out = stats;
  return out;
}

Realization realize_mds(const DegreeSequence& d, const RoundingOptions& opts, RoundingStats* stats) {
  const int gamma = mds_prefix(d);
  const int n = d.n();
  Realization g;
  if (n == 0) {
    g = make_realization(0, {}, {});
    g.certificate = DominatingSet{};
  } else {
    FlowNetwork net = build_mds_flow(d, gamma);
    FlowAssignment f = max_flow(net);
    if (f.value != d.sum()) throw InternalError("flow does not saturate at the computed optimum");
    g = round_bipartite_mds(extract_bipartite_mds(d, gamma, net, f), opts, stats);
  }
  auto& dom = std::get<DominatingSet>(*g.certificate);
  for (int z = 1; z <= d.zero_count(); ++z) {
    g.degrees.push_back(0);
    dom.vertices.push_back(n + z);
  }
  g.n = d.total_vertices();
  return g;
}

bool verify_dominating(const Realization& g, std::span<const int> dominators) {
  std::vector<char> covered(static_cast<std::size_t>(g.n) + 1, 0);
  std::vector<char> in_set(static_cast<std::size_t>(g.n) + 1, 0);
  for (int v : dominators) {
    if (v < 1 || v > g.n) return false;
    in_set[static_cast<std::size_t>(v)] = 1;
    covered[static_cast<std::size_t>(v)] = 1;
  }
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.n || v > g.n) return false;
    if (in_set[static_cast<std::size_t>(u)]) covered[static_cast<std::size_t>(v)] = 1;
    if (in_set[static_cast<std::size_t>(v)]) covered[static_cast<std::size_t>(u)] = 1;
  }
  return std::all_of(covered.begin() + 1, covered.end(), [](char c) { return c != 0; });
}

}  // namespace degreal
