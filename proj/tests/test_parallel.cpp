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

#include <doctest.h>

#include <random>

#include "degreal/errors.hpp"
#include "degreal/mds.hpp"
#include "degreal/mm.hpp"
#include "degreal/oracle.hpp"
#include "degreal/parallel.hpp"
#include "support.hpp"

using namespace degreal;

TEST_SUITE("parallel") {
  TEST_CASE("parallel oracle matches the serial one") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& d : testing::graphic_sequences(n)) {
        CHECK(par::oracle_mds(d) == oracle_mds(d));
        CHECK(par::oracle_mm(d) == oracle_mm(d));
      }
    }
    CHECK_THROWS_AS(par::oracle_mds(parse_sequence("3 1")), NotGraphicError);
    CHECK_THROWS_AS(par::oracle_mm(parse_sequence("1 1 1 1 1 1 1 1 1 1")), LimitError);
  }

  TEST_CASE("parallel profiles match the serial ones") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 30; ++t) {
      auto d = testing::random_graphic(2 + static_cast<int>(rng() % 200), rng);
      CHECK(par::mds_profile(d) == mds_profile(d));
      CHECK(par::mm_profile(d) == mm_profile(d));
    }
  }

  TEST_CASE("batch values") {
    std::mt19937_64 rng(53);
    std::vector<DegreeSequence> seqs;
    for (int t = 0; t < 40; ++t) seqs.push_back(testing::random_graphic(2 + static_cast<int>(rng() % 100), rng));
    auto mds = par::mds_values(seqs);
    auto mm = par::mm_values(seqs);
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      CHECK(mds[k] == mds_value(seqs[k]));
      CHECK(mm[k] == mm_value(seqs[k]));
    }
    std::vector<DegreeSequence> bad{parse_sequence("2 2 2"), parse_sequence("3 1")};
    CHECK_THROWS_AS(par::mds_values(bad), NotGraphicError);
  }
}
