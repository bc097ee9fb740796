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

#include "degreal/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "degreal/errors.hpp"
#include "degreal/mds.hpp"
#include "degreal/mm.hpp"

namespace degreal {

std::vector<char> mds_profile(const DegreeSequence& d) {
  std::vector<char> out(static_cast<std::size_t>(d.n()) + 1);
  for (int g = 0; g <= d.n(); ++g) out[static_cast<std::size_t>(g)] = mds_feasible(d, g);
  return out;
}

std::vector<char> mm_profile(const DegreeSequence& d) {
  std::vector<char> out(static_cast<std::size_t>(d.n() / 2) + 1);
  for (int v = 0; v <= d.n() / 2; ++v) out[static_cast<std::size_t>(v)] = mm_feasible(d, v);
  return out;
}

namespace par {

namespace {

// First exception raised inside a parallel region.
class ErrorSlot {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

// Reduces exact() over all realizations, split by the first vertex's choice.
// Every branch stops once any branch reaches `stop`.
template <typename Reduce>
int oracle_reduce(const DegreeSequence& d, int limit, int init, int stop, Reduce reduce,
                  int (*exact)(const Realization&)) {
  detail::check_oracle_input(d, limit);
  if (!is_graphic(d)) throw NotGraphicError("sequence is not graphic: " + format_sequence(d));
  const std::vector<int> degrees = d.full();
  const auto choices = detail::first_vertex_choices(degrees);
  const auto m = static_cast<std::int64_t>(choices.size());
  std::vector<int> partial(choices.size(), init);
  std::atomic<bool> done{false};
  ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < m; ++k) {
    err.run([&] {
      int best = init;
      detail::enumerate_branch(degrees, choices[static_cast<std::size_t>(k)], [&](const Realization& g) {
        best = reduce(best, exact(g));
        if (best == stop) done.store(true, std::memory_order_relaxed);
        return !done.load(std::memory_order_relaxed);
      });
      partial[static_cast<std::size_t>(k)] = best;
    });
  }
  err.rethrow();
  int best = init;
  for (int v : partial) best = reduce(best, v);
  return best;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int oracle_mds(const DegreeSequence& d, int limit) {
  return oracle_reduce(d, limit, d.total_vertices(), -1,
                       [](int a, int b) { return std::min(a, b); }, &exact_mds);
}

int oracle_mm(const DegreeSequence& d, int limit) {
  return oracle_reduce(d, limit, 0, d.n() / 2, [](int a, int b) { return std::max(a, b); },
                       &exact_mm);
}

std::vector<char> mds_profile(const DegreeSequence& d) {
  const int n = d.n();
  std::vector<char> out(static_cast<std::size_t>(n) + 1);
  ErrorSlot err;
#pragma omp parallel for schedule(static)
  for (int g = 0; g <= n; ++g) {
    err.run([&] { out[static_cast<std::size_t>(g)] = mds_feasible(d, g); });
  }
  err.rethrow();
  return out;
}

std::vector<char> mm_profile(const DegreeSequence& d) {
  const int top = d.n() / 2;
  std::vector<char> out(static_cast<std::size_t>(top) + 1);
  ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 1)
  for (int v = 0; v <= top; ++v) {
    err.run([&] { out[static_cast<std::size_t>(v)] = mm_feasible(d, v); });
  }
  err.rethrow();
  return out;
}

std::vector<int> mds_values(std::span<const DegreeSequence> seqs) {
  std::vector<int> out(seqs.size());
  const auto m = static_cast<std::int64_t>(seqs.size());
  ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < m; ++k) {
    err.run([&] { out[static_cast<std::size_t>(k)] = mds_value(seqs[static_cast<std::size_t>(k)]); });
  }
  err.rethrow();
  return out;
}

std::vector<int> mm_values(std::span<const DegreeSequence> seqs) {
  std::vector<int> out(seqs.size());
  const auto m = static_cast<std::int64_t>(seqs.size());
  ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < m; ++k) {
    err.run([&] { out[static_cast<std::size_t>(k)] = mm_value(seqs[static_cast<std::size_t>(k)]); });
  }
  err.rethrow();
  return out;
}

}  // namespace par

}  // namespace degreal
