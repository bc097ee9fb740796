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

#ifndef DEGREAL_HALF_INTEGRAL_HPP_
#define DEGREAL_HALF_INTEGRAL_HPP_

#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

#include "degreal/bipartite.hpp"
#include "degreal/sequence.hpp"

namespace degreal {

// Symmetric edge weights on [1, n] in half-units: 0, 1 (one half) or 2 (one).
// The weight-1 edges form G^{1/2}; their adjacency is kept as ordered sets
// so that lowest-index-first choices are cheap.
class HalfIntegralGraph {
 public:
  explicit HalfIntegralGraph(std::vector<int> degrees);

  // weight(i, j) = y_ij + y_ji.
  static HalfIntegralGraph from_bipartite(const BipartiteRealization& bip);

  int n() const { return n_; }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i - 1)]; }

  int weight(int i, int j) const {
    return w_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(j - 1)];
  }
  void set_weight(int i, int j, int w);

  const std::set<int>& half_neighbors(int i) const { return half_[static_cast<std::size_t>(i - 1)]; }
  std::size_t half_edge_count() const { return half_edges_; }

  // Sum of weights at i, O(n).
  int weighted_degree(int i) const;
  // Sum of weights from i into [1, prefix], O(prefix).
  int weight_into_prefix(int i, int prefix) const;

  // Weight-2 edges, sorted.
  std::vector<Edge> full_edges() const;

 private:
  int n_;
  std::vector<int> degrees_;
  std::vector<std::uint8_t> w_;
  std::vector<std::set<int>> half_;
  std::size_t half_edges_ = 0;
};

struct RoundingOptions {
  // Re-verify the invariants after every individual modification.
  bool checked = false;
};

struct RoundingStats {
  std::int64_t mr1 = 0;
  std::int64_t mr2 = 0;
  std::int64_t mr3 = 0;
  std::int64_t delta_cycles = 0;
  std::int64_t plain_cycles = 0;
  std::int64_t even_cycles = 0;
  std::int64_t intersecting_pairs = 0;  // odd pairs sharing a vertex
  std::int64_t disjoint_pairs = 0;      // odd pairs joined through an outside edge
  std::int64_t checks = 0;              // invariant checks executed in checked mode
};

enum class CycleKind { Delta, Plain };

// Closed walk v_0 v_1 ... v_{L-1} v_0; edge k (1-based) joins v_{k-1} and v_{k mod L}.
struct Cycle {
  std::vector<int> walk;
  CycleKind kind = CycleKind::Plain;
  int anchor = 0;  // for delta cycles, the nondominating vertex

  std::size_t length() const { return walk.size(); }
  bool odd() const { return walk.size() % 2 == 1; }
  int min_vertex() const;
  bool contains(int v) const;
  // Same cycle traversed from an occurrence of v.
  Cycle rotated_to(int v) const;
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;
};

// Hierholzer on G^{1/2} minus `excluded`: one closed walk per connected
// component with edges, started at the component's lowest vertex and always
// leaving along the lowest unused edge. Throws InternalError on an odd vertex.
std::vector<Cycle> euler_partition(const HalfIntegralGraph& g, const std::set<Edge>& excluded);

// Sets edge k of the walk to `odd_value` for odd k and `even_value` for even k.
void alternate(HalfIntegralGraph& g, const Cycle& c, int odd_value, int even_value);

namespace detail {

// Verifies the rounding invariants on the vertices touched by a modification.
// In MDS mode `prefix` is gamma and every vertex past it must keep at least two
// half-units of weight into the prefix; in MM mode `prefix` is 2 nu and the
// inverted prefix matching must keep full weight.
class InvariantChecker {
 public:
  enum class Mode { Mds, Mm };

  InvariantChecker(const HalfIntegralGraph& g, Mode mode, int prefix, bool enabled,
                   RoundingStats& stats);

  void touched(std::initializer_list<int> vertices);
  void touched(std::span<const int> vertices);
  void all();

 private:
  void vertex(int v);

  const HalfIntegralGraph& g_;
  Mode mode_;
  int prefix_;
  bool enabled_;
  RoundingStats& stats_;
};

}  // namespace detail

}  // namespace degreal

#endif  // DEGREAL_HALF_INTEGRAL_HPP_
