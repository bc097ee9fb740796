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

#include "degreal/bipartite.hpp"

#include <string>

#include "degreal/errors.hpp"

namespace degreal {

BipartiteRealization::BipartiteRealization(std::vector<int> degrees, BipartiteMode mode)
    : degrees_(std::move(degrees)),
      mode_(mode),
      adj_(degrees_.size() * degrees_.size(), 0) {
  int p = prefix();
  if (p < 0 || p > n()) throw DomainError("prefix out of range");
}

int BipartiteRealization::prefix() const {
  if (const auto* m = std::get_if<MdsMode>(&mode_)) return m->gamma;
  return 2 * std::get<MmMode>(mode_).nu;
}

void BipartiteRealization::check() const {
  const int n = this->n();
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    if (at(i, i)) throw ContractError("diagonal entry at " + std::to_string(i));
    int row = 0;
    for (int j = 1; j <= n; ++j) {
      if (at(i, j)) {
        ++row;
        ++col[static_cast<std::size_t>(j - 1)];
      }
    }
    if (row != degrees_[static_cast<std::size_t>(i - 1)]) {
      throw ContractError("row " + std::to_string(i) + " sums to " + std::to_string(row));
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (col[static_cast<std::size_t>(j - 1)] != degrees_[static_cast<std::size_t>(j - 1)]) {
      throw ContractError("column " + std::to_string(j) + " sums to " +
                          std::to_string(col[static_cast<std::size_t>(j - 1)]));
    }
  }
  if (const auto* m = std::get_if<MdsMode>(&mode_)) {
    const int g = m->gamma;
    for (int i = g + 1; i <= n; ++i) {
      bool row_hit = false, col_hit = false;
      for (int j = 1; j <= g; ++j) {
        row_hit = row_hit || at(i, j);
        col_hit = col_hit || at(j, i);
      }
      if (!row_hit) throw ContractError("v_" + std::to_string(i) + " not dominated");
      if (!col_hit) throw ContractError("w_" + std::to_string(i) + " not dominated");
    }
  } else {
    const int p = prefix();
    for (int i = 1; i <= p; ++i) {
      if (!at(i, p - i + 1)) {
        throw ContractError("matching entry (" + std::to_string(i) + "," +
                            std::to_string(p - i + 1) + ") missing");
      }
    }
  }
}

bool BipartiteRealization::valid() const {
  try {
    check();
    return true;
  } catch (const ContractError&) {
    return false;
  }
}

}  // namespace degreal
