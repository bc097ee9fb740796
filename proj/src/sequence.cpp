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

#include "degreal/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "degreal/errors.hpp"

namespace degreal {

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

DegreeSequence DegreeSequence::from_values(std::span<const std::int64_t> values) {
  DegreeSequence d;
  for (std::int64_t v : values) {
    if (v < 0) throw DomainError("negative degree " + std::to_string(v));
    if (v > std::numeric_limits<int>::max())
      throw DomainError("degree too large: " + std::to_string(v));
    if (v == 0) {
      ++d.zero_count_;
    } else {
      d.values_.push_back(static_cast<int>(v));
      d.sum_ += v;
    }
  }
  std::sort(d.values_.begin(), d.values_.end(), std::greater<>());
  return d;
}

DegreeSequence DegreeSequence::from_values(std::initializer_list<std::int64_t> values) {
  return from_values(std::span<const std::int64_t>(values.begin(), values.size()));
}

std::vector<int> DegreeSequence::full() const {
  std::vector<int> out(values_.begin(), values_.end());
  out.resize(out.size() + static_cast<std::size_t>(zero_count_), 0);
  return out;
}

DegreeSequence parse_sequence(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ptr != digits.data() + digits.size()) {
      throw ParseError("not an integer: '" + std::string(tok) + "'");
    }
    if (ec == std::errc::result_out_of_range) {
      throw DomainError("degree out of range: " + std::string(tok));
    }
    values.push_back(v);
    pos = end;
  }
  if (values.empty()) throw DomainError("empty degree sequence");
  return DegreeSequence::from_values(values);
}

std::string format_sequence(const DegreeSequence& d) {
  std::string out;
  for (int v : d.full()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Realization make_realization(int n, std::vector<Edge> edges, std::vector<int> degrees) {
  for (auto& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  return Realization{n, std::move(edges), std::move(degrees), std::nullopt};
}

std::vector<int> degrees_of(int n, std::span<const Edge> edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u >= 1 && u <= n) ++deg[static_cast<std::size_t>(u - 1)];
    if (v >= 1 && v <= n) ++deg[static_cast<std::size_t>(v - 1)];
  }
  return deg;
}

bool verify_degrees(const Realization& g) {
  if (static_cast<int>(g.degrees.size()) != g.n) return false;
  std::vector<Edge> sorted;
  sorted.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.n || v > g.n || u == v) return false;
    sorted.push_back(make_edge(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return degrees_of(g.n, sorted) == g.degrees;
}

namespace detail {

SortedSums::SortedSums(std::span<const int> values)
    : n_(static_cast<int>(values.size())),
      prefix_(values.size() + 1, 0),
      at_least_(values.size() + 3, 0) {
  for (int i = 0; i < n_; ++i) {
    prefix_[static_cast<std::size_t>(i + 1)] = prefix_[static_cast<std::size_t>(i)] + values[static_cast<std::size_t>(i)];
    int v = std::min(values[static_cast<std::size_t>(i)], n_ + 2);
    ++at_least_[static_cast<std::size_t>(v)];
  }
  for (int v = n_ + 1; v >= 0; --v) {
    at_least_[static_cast<std::size_t>(v)] += at_least_[static_cast<std::size_t>(v + 1)];
  }
}

std::int64_t SortedSums::sum(int lo, int hi) const {
  lo = std::max(lo, 1);
  hi = std::min(hi, n_);
  if (lo > hi) return 0;
  return prefix_[static_cast<std::size_t>(hi)] - prefix_[static_cast<std::size_t>(lo - 1)];
}

int SortedSums::count_at_least(std::int64_t v) const {
  // Entries above n + 2 are lumped together; callers only ask for v <= n + 2
  // on the hot path, larger thresholds fall back to this slow branch.
  if (v <= 0) return n_;
  if (v <= n_ + 2) return at_least_[static_cast<std::size_t>(v)];
  int lo = 0, hi = n_;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (prefix_[static_cast<std::size_t>(mid + 1)] - prefix_[static_cast<std::size_t>(mid)] >= v) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::int64_t SortedSums::sum_min(int lo, int hi, std::int64_t cap, int shift) const {
  lo = std::max(lo, 1);
  hi = std::min(hi, n_);
  if (lo > hi) return 0;
  int c = count_at_least(cap + shift);  // d_i - shift >= cap exactly on 1..c
  int split = std::clamp(c, lo - 1, hi);
  std::int64_t capped = static_cast<std::int64_t>(split - lo + 1) * cap;
  std::int64_t rest = sum(split + 1, hi) - static_cast<std::int64_t>(hi - split) * shift;
  return capped + rest;
}

}  // namespace detail

bool is_graphic(const DegreeSequence& d) {
  if (d.sum() % 2 != 0) return false;
  const int n = d.n();
  if (n == 0) return true;
  if (d.max_degree() > n - 1) return false;
  detail::SortedSums s(d.values());
  for (int k = 1; k <= n; ++k) {
    std::int64_t lhs = s.sum(1, k);
    std::int64_t rhs = static_cast<std::int64_t>(k) * (k - 1) + s.sum_min(k + 1, n, k, 0);
    if (lhs > rhs) return false;
  }
  return true;
}

Realization havel_hakimi_realize(const DegreeSequence& d) {
  if (!is_graphic(d)) throw NotGraphicError("sequence is not graphic: " + format_sequence(d));
  const int n = d.n();
  std::vector<int> residual(d.values().begin(), d.values().end());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto by_residual = [&](int a, int b) {
    if (residual[static_cast<std::size_t>(a)] != residual[static_cast<std::size_t>(b)])
      return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
    return a < b;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(d.sum() / 2));
  while (n > 0) {
    std::sort(order.begin(), order.end(), by_residual);
    int u = order.front();
    int r = residual[static_cast<std::size_t>(u)];
    if (r == 0) break;
    if (r > n - 1 || residual[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] == 0) {
      throw InternalError("Havel-Hakimi ran out of partners");
    }
    residual[static_cast<std::size_t>(u)] = 0;
    for (int k = 1; k <= r; ++k) {
      int v = order[static_cast<std::size_t>(k)];
      --residual[static_cast<std::size_t>(v)];
      edges.push_back(make_edge(u + 1, v + 1));
    }
  }
  Realization g = make_realization(d.total_vertices(), std::move(edges), d.full());
  return g;
}

}  // namespace degreal
