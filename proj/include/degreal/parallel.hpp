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

#ifndef DEGREAL_PARALLEL_HPP_
#define DEGREAL_PARALLEL_HPP_

#include <span>
#include <vector>

#include "degreal/oracle.hpp"
#include "degreal/sequence.hpp"

namespace degreal {

// feasible[g] = mds_feasible(d, g) for g in [0, n]. Serial reference.
std::vector<char> mds_profile(const DegreeSequence& d);
// feasible[v] = mm_feasible(d, v) for v in [0, n / 2]. Serial reference.
std::vector<char> mm_profile(const DegreeSequence& d);

// OpenMP versions of the kernels above and of the oracle. Results are
// identical to the serial ones; exceptions thrown by a worker are rethrown on
// the calling thread.
namespace par {

int max_threads();

int oracle_mds(const DegreeSequence& d, int limit = kDefaultOracleLimit);
int oracle_mm(const DegreeSequence& d, int limit = kDefaultOracleLimit);

std::vector<char> mds_profile(const DegreeSequence& d);
std::vector<char> mm_profile(const DegreeSequence& d);

// One value per sequence.
std::vector<int> mds_values(std::span<const DegreeSequence> seqs);
std::vector<int> mm_values(std::span<const DegreeSequence> seqs);

}  // namespace par

}  // namespace degreal

#endif  // DEGREAL_PARALLEL_HPP_
