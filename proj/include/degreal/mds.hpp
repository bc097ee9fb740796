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

#ifndef DEGREAL_MDS_HPP_
#define DEGREAL_MDS_HPP_

#include <span>

#include "degreal/bipartite.hpp"
#include "degreal/flow.hpp"
#include "degreal/half_integral.hpp"
#include "degreal/sequence.hpp"

namespace degreal {

// True iff d has a realization in which [1, gamma] dominates, decided by the
// three inequality systems in O(n). gamma in [0, n], otherwise DomainError.
bool mds_feasible(const DegreeSequence& d, int gamma);

// Least feasible gamma plus the zero-degree vertices. Throws NotGraphicError.
int mds_value(const DegreeSequence& d);

// Least feasible gamma on the positive part only (no zeros added).
int mds_prefix(const DegreeSequence& d);

// Nodes: s, t, x_1..x_n, y_1..y_n, then x'_i and y'_i for i > gamma.
// Arcs, in insertion order: source arcs; for each i its (x_i, y_j) arcs by
// increasing j followed by (x_i, x'_i); (x'_i, y'_j) by increasing i, j;
// (y'_j, y_j); sink arcs. gamma in [1, n].
FlowNetwork build_mds_flow(const DegreeSequence& d, int gamma);

// Reads the bipartite realization off a saturating flow of build_mds_flow.
// Throws InfeasibleError if the flow is below sum d.
BipartiteRealization extract_bipartite_mds(const DegreeSequence& d, int gamma,
                                           const FlowNetwork& net, const FlowAssignment& f);
BipartiteRealization extract_bipartite_mds(const DegreeSequence& d, int gamma,
                                           const FlowAssignment& f);

// Rounds a gamma-prefix-dominated bipartite realization of (d, d) to a simple
// graph on [1, n] where [1, gamma] dominates.
Realization round_bipartite_mds(const BipartiteRealization& bip, const RoundingOptions& opts = {},
                                RoundingStats* stats = nullptr);

// Realization with a minimum possible dominating set. Zero-degree vertices are
// appended and included in the certificate.
Realization realize_mds(const DegreeSequence& d, const RoundingOptions& opts = {},
                        RoundingStats* stats = nullptr);

bool verify_dominating(const Realization& g, std::span<const int> dominators);

}  // namespace degreal

#endif  // DEGREAL_MDS_HPP_
