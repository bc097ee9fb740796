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

#include "degreal/half_integral.hpp"

#include <algorithm>
#include <string>

#include "degreal/errors.hpp"

namespace degreal {

HalfIntegralGraph::HalfIntegralGraph(std::vector<int> degrees)
    : n_(static_cast<int>(degrees.size())),
      degrees_(std::move(degrees)),
      w_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0),
      half_(static_cast<std::size_t>(n_)) {}

HalfIntegralGraph HalfIntegralGraph::from_bipartite(const BipartiteRealization& bip) {
  HalfIntegralGraph g(std::vector<int>(bip.degrees().begin(), bip.degrees().end()));
  for (int i = 1; i <= g.n_; ++i) {
    for (int j = i + 1; j <= g.n_; ++j) {
      int w = (bip.at(i, j) ? 1 : 0) + (bip.at(j, i) ? 1 : 0);
      if (w != 0) g.set_weight(i, j, w);
    }
  }
  return g;
}

void HalfIntegralGraph::set_weight(int i, int j, int w) {
  if (i == j || w < 0 || w > 2) throw InternalError("bad weight update");
  auto ij = static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  auto ji = static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1);
  int old = w_[ij];
  if (old == w) return;
  if (old == 1) {
    half_[static_cast<std::size_t>(i - 1)].erase(j);
    half_[static_cast<std::size_t>(j - 1)].erase(i);
    --half_edges_;
  }
  if (w == 1) {
    half_[static_cast<std::size_t>(i - 1)].insert(j);
    half_[static_cast<std::size_t>(j - 1)].insert(i);
    ++half_edges_;
  }
  w_[ij] = static_cast<std::uint8_t>(w);
  w_[ji] = static_cast<std::uint8_t>(w);
}

int HalfIntegralGraph::weighted_degree(int i) const {
  int s = 0;
  for (int j = 1; j <= n_; ++j) s += weight(i, j);
  return s;
}

int HalfIntegralGraph::weight_into_prefix(int i, int prefix) const {
  int s = 0;
  for (int j = 1; j <= prefix; ++j) s += weight(i, j);
  return s;
}

std::vector<Edge> HalfIntegralGraph::full_edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (weight(i, j) == 2) out.emplace_back(i, j);
    }
  }
  return out;
}

int Cycle::min_vertex() const { return *std::min_element(walk.begin(), walk.end()); }

bool Cycle::contains(int v) const { return std::find(walk.begin(), walk.end(), v) != walk.end(); }

Cycle Cycle::rotated_to(int v) const {
  auto it = std::find(walk.begin(), walk.end(), v);
  if (it == walk.end()) throw InternalError("vertex not on cycle");
  Cycle c = *this;
  std::rotate(c.walk.begin(), c.walk.begin() + (it - walk.begin()), c.walk.end());
  return c;
}

std::vector<Cycle> euler_partition(const HalfIntegralGraph& g, const std::set<Edge>& excluded) {
  const int n = g.n();
  // adjacency[v] lists (neighbor, edge id) by increasing neighbor
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
  int edges = 0;
  for (int u = 1; u <= n; ++u) {
    for (int v : g.half_neighbors(u)) {
      if (v <= u || excluded.count(Edge{u, v}) != 0) continue;
      adj[static_cast<std::size_t>(u)].emplace_back(v, edges);
      adj[static_cast<std::size_t>(v)].emplace_back(u, edges);
      ++edges;
    }
  }
  for (int u = 1; u <= n; ++u) {
    auto& a = adj[static_cast<std::size_t>(u)];
    if (a.size() % 2 != 0) throw InternalError("G^{1/2} has odd vertex " + std::to_string(u));
    std::sort(a.begin(), a.end());
  }
  std::vector<char> used(static_cast<std::size_t>(edges), 0);
  std::vector<std::size_t> ptr(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Cycle> out;
  for (int start = 1; start <= n; ++start) {
    auto& sa = adj[static_cast<std::size_t>(start)];
    while (ptr[static_cast<std::size_t>(start)] < sa.size() &&
           used[static_cast<std::size_t>(sa[ptr[static_cast<std::size_t>(start)]].second)]) {
      ++ptr[static_cast<std::size_t>(start)];
    }
    if (ptr[static_cast<std::size_t>(start)] == sa.size()) continue;
    std::vector<int> stack{start};
    std::vector<int> circuit;
    while (!stack.empty()) {
      int u = stack.back();
      auto& a = adj[static_cast<std::size_t>(u)];
      auto& p = ptr[static_cast<std::size_t>(u)];
      while (p < a.size() && used[static_cast<std::size_t>(a[p].second)]) ++p;
      if (p < a.size()) {
        used[static_cast<std::size_t>(a[p].second)] = 1;
        stack.push_back(a[p].first);
      } else {
        circuit.push_back(u);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    circuit.pop_back();
    Cycle c;
    c.walk = std::move(circuit);
    out.push_back(std::move(c));
  }
  return out;
}

void alternate(HalfIntegralGraph& g, const Cycle& c, int odd_value, int even_value) {
  const std::size_t len = c.walk.size();
  for (std::size_t k = 1; k <= len; ++k) {
    int u = c.walk[k - 1];
    int v = c.walk[k % len];
    if (g.weight(u, v) != 1) throw InternalError("cycle edge is not half-weight");
    g.set_weight(u, v, k % 2 == 1 ? odd_value : even_value);
  }
}

namespace detail {

InvariantChecker::InvariantChecker(const HalfIntegralGraph& g, Mode mode, int prefix,
                                   bool enabled, RoundingStats& stats)
    : g_(g), mode_(mode), prefix_(prefix), enabled_(enabled), stats_(stats) {}

void InvariantChecker::touched(std::initializer_list<int> vertices) {
  touched(std::span<const int>(vertices.begin(), vertices.size()));
}

void InvariantChecker::touched(std::span<const int> vertices) {
  if (!enabled_) return;
  for (int v : vertices) vertex(v);
}

void InvariantChecker::all() {
  if (!enabled_) return;
  for (int v = 1; v <= g_.n(); ++v) vertex(v);
}

void InvariantChecker::vertex(int v) {
  ++stats_.checks;
  if (g_.weighted_degree(v) != 2 * g_.degree(v)) {
    throw InternalError("weighted degree of " + std::to_string(v) + " changed");
  }
  if (g_.half_neighbors(v).size() % 2 != 0) {
    throw InternalError("G^{1/2} odd at " + std::to_string(v));
  }
  if (mode_ == Mode::Mds) {
    if (v > prefix_ && g_.weight_into_prefix(v, prefix_) < 2) {
      throw InternalError("vertex " + std::to_string(v) + " lost its dominator weight");
    }
  } else if (v <= prefix_ && g_.weight(v, prefix_ - v + 1) != 2) {
    throw InternalError("matching edge at " + std::to_string(v) + " lost weight");
  }
}

}  // namespace detail

}  // namespace degreal
