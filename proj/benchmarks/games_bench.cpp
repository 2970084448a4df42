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

#include "boardforge/engine/rng.hpp"
#include "boardforge/games/blackbox.hpp"
#include "boardforge/games/mastermind.hpp"
#include "boardforge/games/othello.hpp"

namespace bf = boardforge;

namespace {

void BM_OthelloLegalPlacements(benchmark::State& state) {
  const auto s = bf::games::othello::initial_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bf::games::othello::legal_placements(s.board, bf::games::othello::Disc::kBlack));
  }
}
BENCHMARK(BM_OthelloLegalPlacements);

void BM_BlackBoxAllPorts(benchmark::State& state) {
  const std::vector<int> cells = {3, 19, 36, 58};
  const auto atoms = bf::games::blackbox::atom_set(cells);
  for (auto _ : state) {
    for (int port = 1; port <= bf::games::blackbox::kPorts; ++port) {
      benchmark::DoNotOptimize(bf::games::blackbox::trace(atoms, port));
    }
  }
}
BENCHMARK(BM_BlackBoxAllPorts);

void BM_MastermindFeedbackGrid(benchmark::State& state) {
  const auto& codes = bf::games::mastermind::all_codes();
  for (auto _ : state) {
    int black = 0;
    for (const auto& guess : codes) black += bf::games::mastermind::feedback(codes[0], guess).black;
    benchmark::DoNotOptimize(black);
  }
}
BENCHMARK(BM_MastermindFeedbackGrid);

}  // namespace
