// Copyright 2026 The gssf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <vector>

#include <benchmark/benchmark.h>

#include "gssf/connections.hpp"
#include "gssf/contact_geometry.hpp"
#include "gssf/invariants.hpp"
#include "gssf/submanifolds.hpp"

namespace gssf {
namespace {

constexpr SpaceFormParams kParams{0.7, -0.3, 1.1};

ConnectionKind kind_arg(const benchmark::State& state) {
  return kAllConnections[static_cast<size_t>(state.range(0))];
}

void BM_CurvatureOracle(benchmark::State& state) {
  const ConnectionKind kind = kind_arg(state);
  const AlmostContactStructure acs = canonical_structure(3);
  Sampler s(1);
  const Vector x = s.unit_vector(7), y = s.unit_vector(7), z = s.unit_vector(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_oracle(kind, acs, kParams, x, y, z));
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_CurvatureOracle)->DenseRange(0, 4);

void BM_CurvatureClosed(benchmark::State& state) {
  const ConnectionKind kind = kind_arg(state);
  const AlmostContactStructure acs = canonical_structure(3);
  Sampler s(2);
  const Vector x = s.unit_vector(7), y = s.unit_vector(7), z = s.unit_vector(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_closed(kind, acs, kParams, x, y, z));
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_CurvatureClosed)->DenseRange(0, 4);

void BM_RicciDirect(benchmark::State& state) {
  const ConnectionKind kind = ConnectionKind::kTanakaWebster;
  const int n = static_cast<int>(state.range(0));
  const AlmostContactStructure acs = canonical_structure(n);
  Sampler s(3);
  const Submanifold base = random_submanifold(acs, 2 * n - 1, s);
  const Submanifold sub = base.with_sff(random_sff(base, s));
  const Vector x = random_tangent(sub, s), y = random_tangent(sub, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ricci_direct(sub, kind, kParams, x, y));
  }
}
BENCHMARK(BM_RicciDirect)->DenseRange(2, 5);

void BM_ScalarDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AlmostContactStructure acs = canonical_structure(n);
  Sampler s(4);
  const Submanifold base = random_submanifold(acs, 2 * n - 1, s);
  const Submanifold sub = base.with_sff(random_sff(base, s));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalar_direct(sub, ConnectionKind::kSchoutenVanKampen, kParams));
  }
}
BENCHMARK(BM_ScalarDirect)->DenseRange(2, 4);

void BM_AsiSplit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AlmostContactStructure acs = canonical_structure(n);
  Sampler s(5);
  const Submanifold sub = random_submanifold(acs, 2 * n - 1, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(asi_split(sub));
  }
}
BENCHMARK(BM_AsiSplit)->DenseRange(2, 6);

void BM_RandomMinimalSubmanifold(benchmark::State& state) {
  const AlmostContactStructure acs = canonical_structure(3);
  Sampler s(6);
  for (auto _ : state) {
    const Submanifold base = random_submanifold(acs, 4, s);
    benchmark::DoNotOptimize(base.with_sff(random_minimal_sff(base, s)));
  }
}
BENCHMARK(BM_RandomMinimalSubmanifold);

}  // namespace
}  // namespace gssf

BENCHMARK_MAIN();
