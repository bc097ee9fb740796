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

#include "degreal/mm.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "degreal/errors.hpp"

namespace degreal {

namespace {

void check_nu(const DegreeSequence& d, int nu) {
  if (nu < 0 || 2 * static_cast<std::int64_t>(nu) > d.n()) throw DomainError("nu out of range");
}

// Multiset of small non-negative integers with sums of the m largest.
class TopSum {
 public:
  explicit TopSum(int max_value)
      : max_(max_value),
        size_(max_value + 1),
        cnt_(static_cast<std::size_t>(size_) + 1, 0),
        sum_(static_cast<std::size_t>(size_) + 1, 0) {}

  void add(std::int64_t v, int c) {
    count_ += c;
    total_ += c * v;
    for (int i = static_cast<int>(max_ - v) + 1; i <= size_; i += i & -i) {
      cnt_[static_cast<std::size_t>(i)] += c;
      sum_[static_cast<std::size_t>(i)] += c * v;
    }
  }

  std::int64_t count() const { return count_; }
  std::int64_t total() const { return total_; }

  std::int64_t top(std::int64_t m) const {
    if (m <= 0) return 0;
    if (m >= count_) return total_;
    int pos = 0;
    std::int64_t c = 0, s = 0;
    for (int step = std::bit_floor(static_cast<unsigned>(size_)); step > 0; step >>= 1) {
      int next = pos + step;
      if (next <= size_ && c + cnt_[static_cast<std::size_t>(next)] < m) {
        pos = next;
        c += cnt_[static_cast<std::size_t>(pos)];
        s += sum_[static_cast<std::size_t>(pos)];
      }
    }
    return s + (m - c) * (max_ - pos);
  }

 private:
  std::int64_t max_;
  int size_;
  std::vector<std::int64_t> cnt_;
  std::vector<std::int64_t> sum_;
  std::int64_t count_ = 0;
  std::int64_t total_ = 0;
};

}  // namespace

FlowNetwork build_mm_flow(const DegreeSequence& d, int nu) {
  check_nu(d, nu);
  const int n = d.n();
  const int p = 2 * nu;
  FlowNetwork net;
  std::vector<int> x(static_cast<std::size_t>(n) + 1), y(x);
  for (int i = 1; i <= n; ++i) x[static_cast<std::size_t>(i)] = net.add_node(i <= p ? NodeRole::XM : NodeRole::XR, i);
  for (int j = 1; j <= n; ++j) y[static_cast<std::size_t>(j)] = net.add_node(j <= p ? NodeRole::YM : NodeRole::YR, j);
  for (int i = 1; i <= n; ++i) net.add_arc(net.source(), x[static_cast<std::size_t>(i)], d[i] - (i <= p ? 1 : 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || (i <= p && j == p - i + 1)) continue;
      net.add_arc(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)], 1);
    }
  }
  for (int j = 1; j <= n; ++j) net.add_arc(y[static_cast<std::size_t>(j)], net.sink(), d[j] - (j <= p ? 1 : 0));
  return net;
}

// With a_j the source capacity of x_j and I the set of x-nodes kept on the
// source side, the cheapest cut for |I| = k is sum a - V(k) + sum_j min(a_j, k).
// V(k) is the best total of k "units", one per chosen x_i; a unit's value
// depends only on the class of a_i relative to k (H: a >= k, E: a = k - 1,
// L: a <= k - 2) and on the class of its prefix partner. The sweep over k keeps
// the units in two Fenwick multisets and re-files only the vertices whose class
// moved, together with their partners.
std::int64_t mm_max_flow_value(const DegreeSequence& d, int nu) {
  check_nu(d, nu);
  const int n = d.n();
  if (n == 0) return 0;
  const int p = 2 * nu;
  std::vector<std::int64_t> a(static_cast<std::size_t>(n));
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::int64_t sum_a = 0, max_a = 0;
  for (int j = 0; j < n; ++j) {
    // x_j has at most n - 1 middle arcs, so capacities above n never bind
    a[static_cast<std::size_t>(j)] = std::min<std::int64_t>(d[j + 1] - (j < p ? 1 : 0), n);
    if (j < p) partner[static_cast<std::size_t>(j)] = p - 1 - j;
    sum_a += a[static_cast<std::size_t>(j)];
    max_a = std::max(max_a, a[static_cast<std::size_t>(j)]);
  }
  const int cap_value = static_cast<int>(max_a) + 2;
  TopSum big(cap_value), small(cap_value);

  enum Cls : char { H, E, L };
  std::vector<char> cls(static_cast<std::size_t>(n), H);
  std::int64_t ebig = 0, e_small = 0, e_pairs2 = 0, h_count = 0, low_sum = 0;

  auto pcls = [&](int j) {
    int q = partner[static_cast<std::size_t>(j)];
    return q < 0 ? static_cast<char>(L) : cls[static_cast<std::size_t>(q)];
  };
  auto file = [&](int j, int sign) {
    const std::int64_t aj = a[static_cast<std::size_t>(j)];
    const char pc = pcls(j);
    switch (cls[static_cast<std::size_t>(j)]) {
      case H:
        big.add(aj + 1 + (pc == H ? 1 : 0), sign);
        h_count += sign;
        break;
      case E:
        if (pc == H) {
          ebig += sign;
        } else if (pc == E) {
          e_pairs2 += sign;
        } else {
          e_small += sign;
        }
        low_sum += sign * aj;
        break;
      default:
        small.add(aj + ((pc == H || pc == E) ? 1 : 0), sign);
        low_sum += sign * aj;
        break;
    }
  };

  std::vector<std::vector<int>> by_value(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j < n; ++j) {
    by_value[static_cast<std::size_t>(a[static_cast<std::size_t>(j)])].push_back(j);
    file(j, +1);
  }

  std::int64_t best = 0;
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  std::vector<int> changed, affected;
  for (int k = 1; k <= n; ++k) {
    changed.clear();
    affected.clear();
    for (int j : by_value[static_cast<std::size_t>(k - 1)]) changed.push_back(j);
    if (k >= 2) {
      for (int j : by_value[static_cast<std::size_t>(k - 2)]) changed.push_back(j);
    }
    for (int j : changed) {
      for (int v : {j, partner[static_cast<std::size_t>(j)]}) {
        if (v >= 0 && stamp[static_cast<std::size_t>(v)] != k) {
          stamp[static_cast<std::size_t>(v)] = k;
          affected.push_back(v);
        }
      }
    }
    for (int j : affected) file(j, -1);
    for (int j : changed) cls[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] == k - 1 ? E : L;
    for (int j : affected) file(j, +1);

    const std::int64_t kk = k;
    const std::int64_t nb = big.count() + ebig;
    std::int64_t value;
    if (kk <= nb) {
      value = kk <= big.count() ? big.top(kk) : big.total() + (kk - big.count()) * (kk + 1);
    } else {
      value = big.total() + ebig * (kk + 1);
      const std::int64_t r = kk - nb;
      const std::int64_t q = e_pairs2 / 2;
      if (r <= 2 * q) {
        value += r * kk - (r % 2);
      } else {
        const std::int64_t m = r - 2 * q;
        value += 2 * q * kk;
        value += m <= e_small ? m * (kk - 1) : e_small * (kk - 1) + small.top(m - e_small);
      }
    }
    const std::int64_t rhs = kk * h_count + low_sum;
    best = std::max(best, value - rhs);
  }
  return sum_a - best;
}

bool mm_feasible(const DegreeSequence& d, int nu) {
  check_nu(d, nu);
  if (!is_graphic(d)) return false;
  return mm_max_flow_value(d, nu) == d.sum() - 2 * static_cast<std::int64_t>(nu);
}

int mm_value(const DegreeSequence& d) {
  if (!is_graphic(d)) throw NotGraphicError("sequence is not graphic: " + format_sequence(d));
  // a matching of size nu contains one of size nu - 1
  int lo = 0, hi = d.n() / 2;
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    if (mm_feasible(d, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

BipartiteRealization extract_bipartite_mm(const DegreeSequence& d, int nu, const FlowNetwork& net,
                                          const FlowAssignment& f) {
  check_nu(d, nu);
  if (f.flow.size() != net.arcs().size()) throw DomainError("flow does not match network");
  const std::int64_t need = d.sum() - 2 * static_cast<std::int64_t>(nu);
  if (f.value < need) {
    throw InfeasibleError("no " + std::to_string(nu) + "-matched realization (flow " +
                          std::to_string(f.value) + " < " + std::to_string(need) + ")");
  }
  BipartiteRealization bip(std::vector<int>(d.values().begin(), d.values().end()), MmMode{nu});
  const int p = 2 * nu;
  for (int i = 1; i <= p; ++i) bip.set(i, p - i + 1, true);
  auto is_x = [](NodeRole r) { return r == NodeRole::XM || r == NodeRole::XR; };
  auto is_y = [](NodeRole r) { return r == NodeRole::YM || r == NodeRole::YR; };
  for (std::size_t k = 0; k < f.flow.size(); ++k) {
    if (f.flow[k] != 1) continue;
    const Arc& arc = net.arcs()[k];
    const NodeLabel& from = net.label(arc.from);
    const NodeLabel& to = net.label(arc.to);
    if (is_x(from.role) && is_y(to.role)) bip.set(from.index, to.index, true);
  }
  try {
    bip.check();
  } catch (const ContractError& e) {
    throw InternalError(std::string("extracted realization is broken: ") + e.what());
  }
  return bip;
}

BipartiteRealization extract_bipartite_mm(const DegreeSequence& d, int nu, const FlowAssignment& f) {
  return extract_bipartite_mm(d, nu, build_mm_flow(d, nu), f);
}

std::vector<Edge> inverted_matching(int nu) {
  std::vector<Edge> m;
  for (int i = 1; i <= nu; ++i) m.emplace_back(i, 2 * nu - i + 1);
  return m;
}

namespace {

std::vector<int> distinct_sorted(const Cycle& c) {
  std::vector<int> v = c.walk;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Realization round_bipartite_mm(const BipartiteRealization& bip, const RoundingOptions& opts,
                               RoundingStats* stats_out) {
  const auto* mode = std::get_if<MmMode>(&bip.mode());
  if (mode == nullptr) throw ContractError("expected a matched realization");
  bip.check();
  const int n = bip.n();
  const int nu = mode->nu;
  const int p = 2 * nu;
  RoundingStats stats;
  HalfIntegralGraph g = HalfIntegralGraph::from_bipartite(bip);
  detail::InvariantChecker check(g, detail::InvariantChecker::Mode::Mm, p, opts.checked, stats);
  check.all();

  std::vector<Cycle> odd;
  for (Cycle& c : euler_partition(g, {})) {
    ++stats.plain_cycles;
    if (c.odd()) {
      odd.push_back(std::move(c));
      continue;
    }
    alternate(g, c, 0, 2);
    check.touched(c.walk);
    ++stats.even_cycles;
  }

  if (odd.size() % 2 != 0) throw InternalError("odd number of odd cycles");
  // components are listed by lowest vertex already
  auto matched = [p](int u, int v) { return u <= p && v == p - u + 1; };
  for (std::size_t k = 0; k < odd.size(); k += 2) {
    const Cycle& c1 = odd[k];
    const Cycle& c2 = odd[k + 1];
    std::vector<int> xs = distinct_sorted(c1), ys = distinct_sorted(c2);
    int x = 0, y = 0;
    for (int u : xs) {
      for (int v : ys) {
        if (!matched(u, v)) {
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

  std::vector<int> degrees(bip.degrees().begin(), bip.degrees().end());
  Realization out = make_realization(n, g.full_edges(), std::move(degrees));
  Matching m{inverted_matching(nu)};
  if (!verify_degrees(out) || !verify_matching(out, m.edges)) {
    throw InternalError("rounded graph fails verification");
  }
  out.certificate = std::move(m);
  if (stats_out != nullptr) *stats_out = stats;
  return out;
}

Realization realize_mm(const DegreeSequence& d, const RoundingOptions& opts, RoundingStats* stats) {
  const int nu = mm_value(d);
  const int n = d.n();
  Realization g;
  if (n == 0) {
    g = make_realization(0, {}, {});
    g.certificate = Matching{};
  } else {
    FlowNetwork net = build_mm_flow(d, nu);
    FlowAssignment f = max_flow(net);
    if (f.value != d.sum() - 2 * static_cast<std::int64_t>(nu)) {
      throw InternalError("flow does not saturate at the computed optimum");
    }
    g = round_bipartite_mm(extract_bipartite_mm(d, nu, net, f), opts, stats);
  }
  g.degrees.resize(static_cast<std::size_t>(d.total_vertices()), 0);
  g.n = d.total_vertices();
  return g;
}

namespace {

class EdgeSet {
 public:
  explicit EdgeSet(const Realization& g) : edges_(g.edges.begin(), g.edges.end()) {}
  bool has(int u, int v) const { return edges_.count(make_edge(u, v)) != 0; }
  void erase(int u, int v) { edges_.erase(make_edge(u, v)); }
  void insert(int u, int v) { edges_.insert(make_edge(u, v)); }
  std::vector<Edge> sorted() const { return {edges_.begin(), edges_.end()}; }

 private:
  std::set<Edge> edges_;
};

void flip_in_place(EdgeSet& es, int x, int u, int y, int v) {
  if (x == u || x == y || x == v || u == y || u == v || y == v) {
    throw FlipError("flip vertices must be distinct");
  }
  if (!es.has(x, u) || !es.has(y, v)) throw FlipError("flip needs (x,u) and (y,v) present");
  if (es.has(x, y) || es.has(u, v)) throw FlipError("flip needs (x,y) and (u,v) absent");
  es.erase(x, u);
  es.erase(y, v);
  es.insert(x, y);
  es.insert(u, v);
}

}  // namespace

Realization flip(const Realization& g, int x, int u, int y, int v) {
  for (int w : {x, u, y, v}) {
    if (w < 1 || w > g.n) throw FlipError("flip vertex out of range");
  }
  EdgeSet es(g);
  flip_in_place(es, x, u, y, v);
  return make_realization(g.n, es.sorted(), g.degrees);
}

Realization invert_matching(const Realization& g, std::span<const Edge> matching,
                            InvertTrace* trace) {
  const int nu = static_cast<int>(matching.size());
  const int p = 2 * nu;
  if (p > g.n) throw ContractError("matching larger than the graph");
  if (!verify_matching(g, matching)) throw ContractError("not a matching of the graph");
  std::vector<int> mate(static_cast<std::size_t>(g.n) + 1, 0);
  for (auto [u, v] : matching) {
    if (u > p || v > p) throw ContractError("matching is not on the prefix");
    mate[static_cast<std::size_t>(u)] = v;
    mate[static_cast<std::size_t>(v)] = u;
  }
  std::vector<int> deg = degrees_of(g.n, g.edges);
  for (int i = 1; i < p; ++i) {
    if (deg[static_cast<std::size_t>(i - 1)] < deg[static_cast<std::size_t>(i)]) {
      throw ContractError("degrees are not non-increasing on the prefix");
    }
  }

  EdgeSet es(g);
  InvertTrace local;
  int f = 1;
  for (;;) {
    while (f <= nu && mate[static_cast<std::size_t>(f)] == p - f + 1) ++f;
    if (f > nu) break;
    if (local.iterations >= nu) throw InternalError("invert did not converge");
    const int i = f, j = p - f + 1;
    const int x = mate[static_cast<std::size_t>(i)], y = mate[static_cast<std::size_t>(j)];
    const bool ij = es.has(i, j), xy = es.has(x, y);
    int kase;
    if (ij && xy) {
      kase = 1;
    } else if (!ij && !xy) {
      kase = 2;
      flip_in_place(es, i, x, j, y);
    } else if (ij) {
      kase = 3;
      int z = 0;
      for (int c = 1; c <= g.n && z == 0; ++c) {
        if (c != x && c != j && c != y && es.has(x, c) && !es.has(j, c)) z = c;
      }
      if (z == 0) throw InternalError("no witness vertex for invert case 3");
      flip_in_place(es, x, z, y, j);
    } else {
      kase = 4;
      int z = 0;
      for (int c = 1; c <= g.n && z == 0; ++c) {
        if (c != i && c != j && c != y && es.has(i, c) && !es.has(y, c)) z = c;
      }
      if (z == 0) throw InternalError("no witness vertex for invert case 4");
      flip_in_place(es, i, z, j, y);
    }
    mate[static_cast<std::size_t>(i)] = j;
    mate[static_cast<std::size_t>(j)] = i;
    mate[static_cast<std::size_t>(x)] = y;
    mate[static_cast<std::size_t>(y)] = x;
    ++local.iterations;
    local.cases.push_back(kase);
  }

  Realization out = make_realization(g.n, es.sorted(), g.degrees);
  out.certificate = Matching{inverted_matching(nu)};
  if (trace != nullptr) *trace = std::move(local);
  return out;
}

bool verify_matching(const Realization& g, std::span<const Edge> matching) {
  std::set<Edge> edges(g.edges.begin(), g.edges.end());
  std::vector<char> used(static_cast<std::size_t>(g.n) + 1, 0);
  for (auto [u, v] : matching) {
    if (u < 1 || v < 1 || u > g.n || v > g.n || u == v) return false;
    if (edges.count(make_edge(u, v)) == 0) return false;
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

}  // namespace degreal
