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

#ifndef DEGREAL_SEQUENCE_HPP_
#define DEGREAL_SEQUENCE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace degreal {

// Unordered vertex pair, 1-based. Normalized so that first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

// A finite degree sequence, normalized: positive entries sorted
// non-increasing, zeros stripped and counted separately.
//
// Vertex i (1-based) of every realization produced by this library has
// degree values()[i-1]; the zero_count() isolated vertices follow as
// n()+1 .. n()+zero_count().
class DegreeSequence {
 public:
  DegreeSequence() = default;

  // Throws DomainError on a negative entry. Input order is not preserved.
  static DegreeSequence from_values(std::span<const std::int64_t> values);
  static DegreeSequence from_values(std::initializer_list<std::int64_t> values);

  std::span<const int> values() const { return values_; }
  int n() const { return static_cast<int>(values_.size()); }
  int zero_count() const { return zero_count_; }
  int total_vertices() const { return n() + zero_count_; }

  // d_i, 1-based.
  int operator[](int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  int max_degree() const { return values_.empty() ? 0 : values_.front(); }
  std::int64_t sum() const { return sum_; }

  // Positive entries followed by zero_count() zeros.
  std::vector<int> full() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
  int zero_count_ = 0;
  std::int64_t sum_ = 0;
};

// Integers separated by whitespace and/or commas.
// Throws ParseError on a non-integer token, DomainError on a negative entry or
// when no integer is present.
DegreeSequence parse_sequence(std::string_view text);

// Space separated, non-increasing, zeros last. parse_sequence(format_sequence(d)) == d.
std::string format_sequence(const DegreeSequence& d);

struct DominatingSet {
  std::vector<int> vertices;
  friend bool operator==(const DominatingSet&, const DominatingSet&) = default;
};

struct Matching {
  std::vector<Edge> edges;
  friend bool operator==(const Matching&, const Matching&) = default;
};

using Certificate = std::variant<DominatingSet, Matching>;

// A simple graph on vertices 1..n, the degree sequence it claims to realize
// (position i is the intended degree of vertex i), and an optional
// certificate. Edges are kept sorted lexicographically.
struct Realization {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> degrees;
  std::optional<Certificate> certificate;

  friend bool operator==(const Realization&, const Realization&) = default;
};

// Sorts and normalizes edges. Does not check simplicity.
Realization make_realization(int n, std::vector<Edge> edges, std::vector<int> degrees);

// Every endpoint in range, no loops, no duplicate edge, and deg(i) == degrees[i-1].
bool verify_degrees(const Realization& g);

// Degree of each vertex, 0-based index.
std::vector<int> degrees_of(int n, std::span<const Edge> edges);

// Erdos-Gallai test in O(n): sum even and
// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i) for every k.
bool is_graphic(const DegreeSequence& d);

// Baseline realization. Repeatedly takes the vertex of largest residual degree
// (lowest index on ties) and joins it to the next-largest residual degrees
// (lowest index on ties). Throws NotGraphicError.
Realization havel_hakimi_realize(const DegreeSequence& d);

namespace detail {

// Sum helpers over a non-increasing positive sequence, all O(1) after an O(n)
// setup. Indices are 1-based and ranges are inclusive; empty ranges give 0.
class SortedSums {
 public:
  explicit SortedSums(std::span<const int> values);

  int n() const { return n_; }
  std::int64_t sum(int lo, int hi) const;
  // sum_{i=lo}^{hi} min(cap, d_i - shift) for cap >= 0, shift in {0, 1}.
  std::int64_t sum_min(int lo, int hi, std::int64_t cap, int shift) const;

 private:
  // #{i : d_i >= v}, v clamped to [0, n + 2].
  int count_at_least(std::int64_t v) const;

  int n_ = 0;
  std::vector<std::int64_t> prefix_;
  std::vector<int> at_least_;
};

}  // namespace detail

}  // namespace degreal

#endif  // DEGREAL_SEQUENCE_HPP_
