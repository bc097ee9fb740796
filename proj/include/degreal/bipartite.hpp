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

#ifndef DEGREAL_BIPARTITE_HPP_
#define DEGREAL_BIPARTITE_HPP_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace degreal {

struct MdsMode {
  int gamma;
};

struct MmMode {
  int nu;
};

using BipartiteMode = std::variant<MdsMode, MmMode>;

// A bipartite graph between V = {v_1..v_n} and W = {w_1..w_n} realizing the
// pair (d, d), stored as an n x n 0/1 matrix: at(i, j) iff (v_i, w_j) is an edge.
class BipartiteRealization {
 public:
  BipartiteRealization(std::vector<int> degrees, BipartiteMode mode);

  int n() const { return static_cast<int>(degrees_.size()); }
  std::span<const int> degrees() const { return degrees_; }
  const BipartiteMode& mode() const { return mode_; }
  // gamma in MDS mode, 2 nu in MM mode.
  int prefix() const;

  bool at(int i, int j) const {
    return adj_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n()) +
                static_cast<std::size_t>(j - 1)] != 0;
  }
  void set(int i, int j, bool value) {
    adj_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n()) +
         static_cast<std::size_t>(j - 1)] = value ? 1 : 0;
  }

  // Throws ContractError naming the first violated property: zero diagonal,
  // row and column sums equal to d, then the mode property (every vertex past
  // the prefix has a neighbor in the prefix on the other side, or the
  // inverted prefix matching is present).
  void check() const;
  bool valid() const;

 private:
  std::vector<int> degrees_;
  BipartiteMode mode_;
  std::vector<std::uint8_t> adj_;
};

}  // namespace degreal

#endif  // DEGREAL_BIPARTITE_HPP_
