// Copyright 2026 The steiner_gap Authors
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

#include <benchmark/benchmark.h>

#include "steiner_gap/constructions.hpp"
#include "steiner_gap/formulations.hpp"
#include "steiner_gap/instances.hpp"
#include "steiner_gap/lp.hpp"
#include "steiner_gap/oracles.hpp"
#include "steiner_gap/simplex_geometry.hpp"
#include "steiner_gap/solutions.hpp"
#include "steiner_gap/stp_io.hpp"

namespace {

using namespace steiner_gap;

void BM_CompileMcfr(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SteinerInstance inst = gen_simplex_instance(d, d);
  for (auto _ : state) {
    CompiledLp compiled = compile_mcfr(inst, -1, state.range(1) != 0);
    benchmark::DoNotOptimize(compiled.lp.num_constraints());
  }
}
BENCHMARK(BM_CompileMcfr)->Args({2, 0})->Args({3, 0})->Args({3, 1})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_ExactMcfr(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SteinerInstance inst = gen_simplex_instance(d, d);
  CompiledLp compiled = compile_mcfr(inst, -1, state.range(1) != 0);
  for (auto _ : state) {
    LpOutcome out = solve_exact(compiled.lp);
    benchmark::DoNotOptimize(out.objective);
  }
}
BENCHMARK(BM_ExactMcfr)->Args({2, 0})->Args({2, 1})->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_ExactMcfrColdStart(benchmark::State& state) {
  SteinerInstance inst = gen_simplex_instance(3, 3);
  CompiledLp compiled = compile_mcfr(inst, -1, state.range(0) != 0);
  SolveOptions options;
  options.float_warm_start = false;
  for (auto _ : state) {
    LpOutcome out = solve_exact(compiled.lp, options);
    benchmark::DoNotOptimize(out.objective);
  }
}
BENCHMARK(BM_ExactMcfrColdStart)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FloatMcfr(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SteinerInstance inst = gen_simplex_instance(d, d);
  CompiledLp compiled = compile_mcfr(inst, -1, state.range(1) != 0);
  for (auto _ : state) {
    FloatOutcome out = solve_float(compiled.lp, 1e-6);
    benchmark::DoNotOptimize(out.objective);
  }
}
BENCHMARK(BM_FloatMcfr)->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_CertificateCheck(benchmark::State& state) {
  SteinerInstance inst = gen_simplex_instance(3, 3);
  CompiledLp compiled = compile_mcfr(inst, -1, true);
  LpOutcome out = solve_exact(compiled.lp);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(compiled.lp, out));
}
BENCHMARK(BM_CertificateCheck)->Unit(benchmark::kMillisecond);

void BM_SimplifiedConstruction(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const int delta = (s + 2) / 3;
  SteinerInstance inst = gen_simplified_simplex_instance(2, s, delta);
  for (auto _ : state) {
    MbfrSolution sol = simplified_simplex_solution(inst, 2, s, delta);
    benchmark::DoNotOptimize(sol.u.size());
  }
}
BENCHMARK(BM_SimplifiedConstruction)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_VerifyConstruction(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const int delta = (s + 2) / 3;
  SteinerInstance inst = gen_simplified_simplex_instance(2, s, delta);
  MbfrSolution sol = simplified_simplex_solution(inst, 2, s, delta);
  for (auto _ : state) benchmark::DoNotOptimize(verify(inst, {BaseFormulation::MBFR, false, -1}, sol));
}
BENCHMARK(BM_VerifyConstruction)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_SteinerOracle(benchmark::State& state) {
  SteinerInstance inst = gen_simplex_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_steiner_tree(inst).optimum);
}
BENCHMARK(BM_SteinerOracle)->Args({2, 4})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_MultiwayCut(benchmark::State& state) {
  SteinerInstance inst = gen_multiway_dual(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_multiway_cut(inst).optimum);
}
BENCHMARK(BM_MultiwayCut)->Unit(benchmark::kMillisecond);

void BM_EnumerateSimplex(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simplex(d, 8).size());
}
BENCHMARK(BM_EnumerateSimplex)->Arg(2)->Arg(4)->Arg(6);

void BM_StpRoundTrip(benchmark::State& state) {
  SteinerInstance inst = gen_simplex_instance(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(read_stp(write_stp(inst)).num_edges());
}
BENCHMARK(BM_StpRoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
