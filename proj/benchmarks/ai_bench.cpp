// Copyright 2026 The Boardforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include <benchmark/benchmark.h>

#include "boardforge/ai/eval.hpp"
#include "boardforge/ai/knuth.hpp"
#include "boardforge/ai/pig_solver.hpp"
#include "boardforge/ai/search.hpp"
#include "boardforge/engine/rng.hpp"
#include "boardforge/games/builtin.hpp"

namespace bf = boardforge;

namespace {

void BM_AlphaBeta(benchmark::State& state, const char* game) {
  const auto rules = bf::games::builtin_registry().get(game);
  bf::engine::Rng rng(5);
  const auto root = rules->initial_state(2, rng);
  const auto eval = [&](const bf::engine::GameState& s, int seat) {
    return bf::ai::greedy_eval(*rules, s, seat);
  };
  const int depth = static_cast<int>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes += bf::ai::alphabeta(*rules, *root, depth, eval).nodes;
  state.counters["nodes"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK_CAPTURE(BM_AlphaBeta, othello, "othello")->DenseRange(2, 5);
BENCHMARK_CAPTURE(BM_AlphaBeta, kalah, "kalah")->DenseRange(2, 7);

void BM_KnuthOpening(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bf::ai::knuth_next_guess({}));
}
BENCHMARK(BM_KnuthOpening);

void BM_KnuthAfterOneClue(benchmark::State& state) {
  const std::vector<bf::ai::Clue> history = {{{1, 1, 2, 2}, {1, 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(bf::ai::knuth_next_guess(history));
}
BENCHMARK(BM_KnuthAfterOneClue);

void BM_PigSolve(benchmark::State& state) {
  const int target = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bf::ai::pig_solve(target, 1e-9));
}
BENCHMARK(BM_PigSolve)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
