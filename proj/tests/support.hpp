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

// Shared helpers for the test binaries: instance generators and reference
// implementations that do not go through the library code under test.

#ifndef DEGREAL_TESTS_SUPPORT_HPP_
#define DEGREAL_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "degreal/flow.hpp"
#include "degreal/sequence.hpp"

namespace degreal::testing {

// Plain O(n^2) Erdos-Gallai.
inline bool naive_graphic(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  std::int64_t total = 0;
  for (int v : d) total += v;
  if (total % 2 != 0) return false;
  const int n = static_cast<int>(d.size());
  for (int k = 1; k <= n; ++k) {
    std::int64_t lhs = 0, rhs = static_cast<std::int64_t>(k) * (k - 1);
    for (int i = 0; i < k; ++i) lhs += d[static_cast<std::size_t>(i)];
    for (int i = k; i < n; ++i) rhs += std::min(k, d[static_cast<std::size_t>(i)]);
    if (lhs > rhs) return false;
  }
  return true;
}

// Every non-increasing sequence of n entries in [1, max_value].
inline void for_each_positive_sequence(int n, int max_value,
                                       const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> d(static_cast<std::size_t>(n), 1);
  std::function<void(int, int)> rec = [&](int pos, int cap) {
    if (pos == n) {
      f(d);
      return;
    }
    for (int v = cap; v >= 1; --v) {
      d[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  if (n > 0) rec(0, max_value);
}

inline DegreeSequence to_sequence(const std::vector<int>& v) {
  std::vector<std::int64_t> w(v.begin(), v.end());
  return DegreeSequence::from_values(w);
}

inline std::vector<DegreeSequence> graphic_sequences(int n) {
  std::vector<DegreeSequence> out;
  for_each_positive_sequence(n, std::max(1, n - 1), [&](const std::vector<int>& d) {
    if (naive_graphic(d)) out.push_back(to_sequence(d));
  });
  return out;
}

// Degree sequence of G(n, p), zero degrees dropped.
inline DegreeSequence gnp_sequence(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
      }
    }
  }
  std::erase(deg, 0);
  return DegreeSequence::from_values(deg);
}

// Uniform entries in [1, max_degree], resampled until graphic.
inline DegreeSequence uniform_graphic(int n, int max_degree, std::mt19937_64& rng) {
  if (n < 2) return DegreeSequence::from_values({});
  std::uniform_int_distribution<int> pick(1, std::max(1, std::min(max_degree, n - 1)));
  for (;;) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    std::int64_t total = 0;
    for (auto& x : v) total += (x = pick(rng));
    if (total % 2 != 0) v[0] = v[0] > 1 ? v[0] - 1 : v[0] + 1;
    DegreeSequence d = DegreeSequence::from_values(v);
    if (is_graphic(d)) return d;
  }
}

// Mixture of the generators above, all graphic with exactly n positive entries.
inline DegreeSequence random_graphic(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    double r = u(rng);
    DegreeSequence d;
    if (r < 0.5) {
      d = gnp_sequence(n, 0.05 + 0.9 * u(rng), rng);
    } else if (r < 0.75) {
      d = uniform_graphic(n, 3, rng);
    } else {
      d = uniform_graphic(n, n - 1, rng);
    }
    if (d.n() == n) return d;
  }
}

// Minimum s-t cut by enumerating every source side, for tiny networks.
inline std::int64_t brute_min_cut(const FlowNetwork& net) {
  const int n = net.node_count();
  std::int64_t best = -1;
  const int inner = n - 2;
  for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
    auto side = [&](int v) {
      if (v == net.source()) return true;
      if (v == net.sink()) return false;
      return ((mask >> (v - 2)) & 1u) != 0;
    };
    std::int64_t cut = 0;
    for (const Arc& a : net.arcs()) {
      if (side(a.from) && !side(a.to)) cut += a.capacity;
    }
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

}  // namespace degreal::testing

#endif  // DEGREAL_TESTS_SUPPORT_HPP_
