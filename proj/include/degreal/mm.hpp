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

#ifndef DEGREAL_MM_HPP_
#define DEGREAL_MM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "degreal/bipartite.hpp"
#include "degreal/flow.hpp"
#include "degreal/half_integral.hpp"
#include "degreal/sequence.hpp"

namespace degreal {

// Nodes: s, t, x_1..x_n, y_1..y_n. Source and sink arcs carry d_i - 1 inside
// the matched prefix [1, 2 nu] and d_i outside it; (x_i, y_j, 1) for i != j
// unless (i, j) is an inverted prefix pair. Arcs are inserted source arcs
// first, then middle arcs by increasing i, j, then sink arcs.
FlowNetwork build_mm_flow(const DegreeSequence& d, int nu);

// Maximum flow value of build_mm_flow(d, nu), computed from the minimum cut
// in O(n log n) without building the network.
std::int64_t mm_max_flow_value(const DegreeSequence& d, int nu);

// True iff some realization of d contains the matching {(i, 2nu - i + 1)}.
bool mm_feasible(const DegreeSequence& d, int nu);

// Largest feasible nu in [0, n / 2]. Throws NotGraphicError.
int mm_value(const DegreeSequence& d);

// Throws InfeasibleError if the flow is below sum d - 2 nu.
BipartiteRealization extract_bipartite_mm(const DegreeSequence& d, int nu, const FlowNetwork& net,
                                          const FlowAssignment& f);
BipartiteRealization extract_bipartite_mm(const DegreeSequence& d, int nu, const FlowAssignment& f);

Realization round_bipartite_mm(const BipartiteRealization& bip, const RoundingOptions& opts = {},
                               RoundingStats* stats = nullptr);

// Realization with a maximum possible matching, given in inverted prefix form.
// Zero-degree vertices are appended.
Realization realize_mm(const DegreeSequence& d, const RoundingOptions& opts = {},
                       RoundingStats* stats = nullptr);

// Replaces (x, u), (y, v) by (x, y), (u, v). Throws FlipError unless the
// four vertices are distinct, (x, u), (y, v) are edges and (x, y), (u, v) are
// not. The result carries no certificate.
Realization flip(const Realization& g, int x, int u, int y, int v);

struct InvertTrace {
  int iterations = 0;
  std::vector<int> cases;  // 1..4 per iteration
};

// Turns a matching covering exactly [1, 2nu] into {(i, 2nu - i + 1)} by
// flips. Vertex degrees must be non-increasing on [1, 2nu]. The result
// carries the inverted matching as its certificate.
Realization invert_matching(const Realization& g, std::span<const Edge> matching,
                            InvertTrace* trace = nullptr);

bool verify_matching(const Realization& g, std::span<const Edge> matching);

// {(i, 2nu - i + 1) : i in [1, nu]}.
std::vector<Edge> inverted_matching(int nu);

}  // namespace degreal

#endif  // DEGREAL_MM_HPP_
