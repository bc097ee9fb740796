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

#ifndef DEGREAL_ORACLE_HPP_
#define DEGREAL_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "degreal/sequence.hpp"

namespace degreal {

inline constexpr int kDefaultOracleLimit = 8;

// Receives each realization; returning false stops the enumeration.
using RealizationVisitor = std::function<bool(const Realization&)>;

// Every labeled simple graph on [1, N] whose vertex i has degree d.full()[i-1],
// exactly once, where N counts zero-degree vertices too. Throws LimitError if
// N > limit.
void for_each_realization(const DegreeSequence& d, const RealizationVisitor& visit,
                          int limit = kDefaultOracleLimit);
std::vector<Realization> enumerate_realizations(const DegreeSequence& d,
                                                int limit = kDefaultOracleLimit);
std::int64_t count_realizations(const DegreeSequence& d, int limit = kDefaultOracleLimit);

// Smallest dominating set by subset search in increasing size. Up to 30 vertices.
int exact_mds(const Realization& g);
// Largest matching by edge backtracking.
int exact_mm(const Realization& g);

// Minimum / maximum over all realizations. Throw NotGraphicError or LimitError.
int oracle_mds(const DegreeSequence& d, int limit = kDefaultOracleLimit);
int oracle_mm(const DegreeSequence& d, int limit = kDefaultOracleLimit);

namespace detail {

// The enumeration split by the neighborhood of vertex 1: each choice lists the
// neighbors of vertex 1 and the branches are disjoint and exhaustive.
std::vector<std::vector<int>> first_vertex_choices(const std::vector<int>& degrees);
void enumerate_branch(const std::vector<int>& degrees, const std::vector<int>& choice,
                      const RealizationVisitor& visit);
void check_oracle_input(const DegreeSequence& d, int limit);

}  // namespace detail

}  // namespace degreal

#endif  // DEGREAL_ORACLE_HPP_
