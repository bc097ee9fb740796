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

#include "degreal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "degreal/errors.hpp"

namespace degreal {

namespace detail {

namespace {

// Calls f(chosen) for every r-subset of candidates in lexicographic order;
// stops when f returns false.
template <typename F>
bool for_each_subset(const std::vector<int>& candidates, int r, F&& f) {
  const int m = static_cast<int>(candidates.size());
  if (r > m) return true;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) idx[static_cast<std::size_t>(k)] = k;
  std::vector<int> chosen(static_cast<std::size_t>(r));
  for (;;) {
    for (int k = 0; k < r; ++k) chosen[static_cast<std::size_t>(k)] = candidates[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    if (!f(chosen)) return false;
    int k = r - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - r + k) --k;
    if (k < 0) return true;
    ++idx[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < r; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

class Enumerator {
 public:
  Enumerator(const std::vector<int>& degrees, const RealizationVisitor& visit)
      : n_(static_cast<int>(degrees.size())), degrees_(degrees), residual_(degrees), visit_(visit) {}

  // Vertex u (0-based) takes all of its remaining edges to later vertices.
  bool run(int u) {
    if (u == n_) {
      Realization g = make_realization(n_, edges_, degrees_);
      return visit_(g);
    }
    const int r = residual_[static_cast<std::size_t>(u)];
    std::vector<int> cand;
    std::int64_t later = 0;
    for (int v = u + 1; v < n_; ++v) {
      if (residual_[static_cast<std::size_t>(v)] > 0) cand.push_back(v);
      later += residual_[static_cast<std::size_t>(v)];
    }
    if (r > static_cast<int>(cand.size()) || (later - r) % 2 != 0) return true;
    return for_each_subset(cand, r, [&](const std::vector<int>& chosen) { return take(u, chosen); });
  }

  bool take(int u, const std::vector<int>& chosen) {
    for (int v : chosen) {
      --residual_[static_cast<std::size_t>(v)];
      edges_.emplace_back(u + 1, v + 1);
    }
    residual_[static_cast<std::size_t>(u)] -= static_cast<int>(chosen.size());
    bool go = run(u + 1);
    residual_[static_cast<std::size_t>(u)] += static_cast<int>(chosen.size());
    for (int v : chosen) {
      ++residual_[static_cast<std::size_t>(v)];
      edges_.pop_back();
    }
    return go;
  }

 private:
  int n_;
  std::vector<int> degrees_;
  std::vector<int> residual_;
  std::vector<Edge> edges_;
  const RealizationVisitor& visit_;
};

}  // namespace

std::vector<std::vector<int>> first_vertex_choices(const std::vector<int>& degrees) {
  std::vector<std::vector<int>> out;
  if (degrees.empty()) return {std::vector<int>{}};
  std::vector<int> cand;
  for (int v = 1; v < static_cast<int>(degrees.size()); ++v) {
    if (degrees[static_cast<std::size_t>(v)] > 0) cand.push_back(v);
  }
  for_each_subset(cand, degrees.front(), [&](const std::vector<int>& chosen) {
    out.push_back(chosen);
    return true;
  });
  return out;
}

void enumerate_branch(const std::vector<int>& degrees, const std::vector<int>& choice,
                      const RealizationVisitor& visit) {
  Enumerator e(degrees, visit);
  if (degrees.empty()) {
    e.run(0);
    return;
  }
  e.take(0, choice);
}

void check_oracle_input(const DegreeSequence& d, int limit) {
  if (d.total_vertices() > limit) {
    throw LimitError(std::to_string(d.total_vertices()) + " vertices exceed the oracle limit " +
                     std::to_string(limit));
  }
}

}  // namespace detail

void for_each_realization(const DegreeSequence& d, const RealizationVisitor& visit, int limit) {
  detail::check_oracle_input(d, limit);
  std::vector<int> degrees = d.full();
  bool go = true;
  RealizationVisitor guard = [&](const Realization& g) { return go = visit(g); };
  for (const auto& choice : detail::first_vertex_choices(degrees)) {
    detail::enumerate_branch(degrees, choice, guard);
    if (!go) return;
  }
}

std::vector<Realization> enumerate_realizations(const DegreeSequence& d, int limit) {
  std::vector<Realization> out;
  for_each_realization(d, [&](const Realization& g) {
    out.push_back(g);
    return true;
  }, limit);
  return out;
}

std::int64_t count_realizations(const DegreeSequence& d, int limit) {
  std::int64_t count = 0;
  for_each_realization(d, [&](const Realization&) {
    ++count;
    return true;
  }, limit);
  return count;
}

int exact_mds(const Realization& g) {
  const int n = g.n;
  if (n > 30) throw LimitError("exact_mds supports at most 30 vertices");
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = 1u << v;
  for (auto [u, v] : g.edges) {
    closed[static_cast<std::size_t>(u - 1)] |= 1u << (v - 1);
    closed[static_cast<std::size_t>(v - 1)] |= 1u << (u - 1);
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  for (int size = 0; size <= n; ++size) {
    if (size == 0) {
      if (n == 0) return 0;
      continue;
    }
    // Gosper's hack over all masks of this size
    std::uint32_t mask = (1u << size) - 1;
    while (mask <= all) {
      std::uint32_t cover = 0;
      for (std::uint32_t m = mask; m != 0; m &= m - 1) cover |= closed[static_cast<std::size_t>(std::countr_zero(m))];
      if (cover == all) return size;
      std::uint32_t c = mask & (~mask + 1);
      std::uint32_t r = mask + c;
      if (r == 0) break;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return n;
}

namespace {

void best_matching(const std::vector<Edge>& edges, std::size_t from, std::vector<char>& used,
                   int current, int bound, int& best) {
  if (current > best) best = current;
  if (best == bound) return;
  // even taking every remaining edge cannot beat best
  if (current + static_cast<int>(edges.size() - from) <= best) return;
  for (std::size_t k = from; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    best_matching(edges, k + 1, used, current + 1, bound, best);
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
    if (best == bound) return;
  }
}

}  // namespace

int exact_mm(const Realization& g) {
  std::vector<char> used(static_cast<std::size_t>(g.n) + 1, 0);
  int best = 0;
  best_matching(g.edges, 0, used, 0, g.n / 2, best);
  return best;
}

int oracle_mds(const DegreeSequence& d, int limit) {
  detail::check_oracle_input(d, limit);
  if (!is_graphic(d)) throw NotGraphicError("sequence is not graphic: " + format_sequence(d));
  int best = d.total_vertices();
  for_each_realization(d, [&](const Realization& g) {
    best = std::min(best, exact_mds(g));
    return true;
  }, limit);
  return best;
}

int oracle_mm(const DegreeSequence& d, int limit) {
  detail::check_oracle_input(d, limit);
  if (!is_graphic(d)) throw NotGraphicError("sequence is not graphic: " + format_sequence(d));
  const int bound = d.n() / 2;
  int best = 0;
  for_each_realization(d, [&](const Realization& g) {
    best = std::max(best, exact_mm(g));
    return best < bound;
  }, limit);
  return best;
}

}  // namespace degreal
