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

#pragma once

#include <vector>

namespace boardforge::ai {

// Probability that the player to move wins Pig under optimal play by both
// sides, indexed by own banked score, opponent score and turn total.
class PigValueTable {
 public:
  int target() const { return target_; }
  int sweeps() const { return sweeps_; }

  // 1 when own + turn_total already reaches the target.
  double win_probability(int own, int opponent, int turn_total) const;
  double hold_value(int own, int opponent, int turn_total) const;
  double roll_value(int own, int opponent, int turn_total) const;
  // Ties go to holding.
  bool should_roll(int own, int opponent, int turn_total) const;

  // Largest |P - max(hold, roll)| over the table.
  double bellman_residual() const;

 private:
  friend PigValueTable pig_solve(int target, double epsilon);

  std::size_t index(int own, int opponent, int turn_total) const;

  int target_ = 0;
  int sweeps_ = 0;
  std::vector<double> p_;
};

// Value iteration, one score-sum layer at a time from the end of the game
// backwards, until each layer's Bellman residual is below epsilon.
PigValueTable pig_solve(int target = 100, double epsilon = 1e-9);

// Lazily solved, shared table for the given target.
const PigValueTable& pig_table(int target = 100);

}  // namespace boardforge::ai
