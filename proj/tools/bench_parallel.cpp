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

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "degreal/mds.hpp"
#include "degreal/mm.hpp"
#include "degreal/oracle.hpp"
#include "degreal/parallel.hpp"

namespace {

using degreal::DegreeSequence;

// Graphic sequence of n values in [1, cap] by Erdos-Gallai rejection.
DegreeSequence sample(int n, int cap, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(1, cap);
  for (;;) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = val(rng);
    auto d = DegreeSequence::from_values(v);
    if (degreal::is_graphic(d)) return d;
  }
}

const DegreeSequence& oracle_input() {
  static const DegreeSequence d = DegreeSequence::from_values({4, 3, 3, 3, 2, 2, 2, 2, 1});
  return d;
}

void BM_OracleMdsSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(degreal::oracle_mds(oracle_input(), 9));
}
void BM_OracleMdsParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(degreal::par::oracle_mds(oracle_input(), 9));
}
void BM_OracleMmSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(degreal::oracle_mm(oracle_input(), 9));
}
void BM_OracleMmParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(degreal::par::oracle_mm(oracle_input(), 9));
}

void BM_MdsProfileSerial(benchmark::State& st) {
  auto d = sample(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) / 8, 1);
  for (auto _ : st) benchmark::DoNotOptimize(degreal::mds_profile(d));
}
void BM_MdsProfileParallel(benchmark::State& st) {
  auto d = sample(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) / 8, 1);
  for (auto _ : st) benchmark::DoNotOptimize(degreal::par::mds_profile(d));
}
void BM_MmProfileSerial(benchmark::State& st) {
  auto d = sample(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) / 8, 2);
  for (auto _ : st) benchmark::DoNotOptimize(degreal::mm_profile(d));
}
void BM_MmProfileParallel(benchmark::State& st) {
  auto d = sample(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) / 8, 2);
  for (auto _ : st) benchmark::DoNotOptimize(degreal::par::mm_profile(d));
}

std::vector<DegreeSequence> batch() {
  std::vector<DegreeSequence> out;
  for (int k = 0; k < 256; ++k) out.push_back(sample(2000, 200, static_cast<std::uint64_t>(k)));
  return out;
}

void BM_ValuesSerial(benchmark::State& st) {
  auto seqs = batch();
  for (auto _ : st) {
    std::vector<int> out;
    for (const auto& d : seqs) out.push_back(degreal::mm_value(d));
    benchmark::DoNotOptimize(out);
  }
}
void BM_ValuesParallel(benchmark::State& st) {
  auto seqs = batch();
  for (auto _ : st) benchmark::DoNotOptimize(degreal::par::mm_values(seqs));
}

}  // namespace

BENCHMARK(BM_OracleMdsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleMdsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleMmSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleMmParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MdsProfileSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MdsProfileParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MmProfileSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MmProfileParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ValuesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValuesParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
