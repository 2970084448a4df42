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

#include "boardforge/ai/pig_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "boardforge/engine/error.hpp"

namespace boardforge::ai {

std::size_t PigValueTable::index(int own, int opponent, int turn_total) const {
  const auto t = static_cast<std::size_t>(target_);
  return (static_cast<std::size_t>(own) * t + static_cast<std::size_t>(opponent)) * t +
         static_cast<std::size_t>(turn_total);
}

double PigValueTable::win_probability(int own, int opponent, int turn_total) const {
  if (own + turn_total >= target_) return 1.0;
  return p_[index(own, opponent, turn_total)];
}

double PigValueTable::hold_value(int own, int opponent, int turn_total) const {
  if (own + turn_total >= target_) return 1.0;
  return 1.0 - win_probability(opponent, own + turn_total, 0);
}

double PigValueTable::roll_value(int own, int opponent, int turn_total) const {
  double value = (1.0 - win_probability(opponent, own, 0)) / 6.0;
  for (int face = 2; face <= 6; ++face) {
    value += win_probability(own, opponent, turn_total + face) / 6.0;
  }
  return value;
}

bool PigValueTable::should_roll(int own, int opponent, int turn_total) const {
  return roll_value(own, opponent, turn_total) > hold_value(own, opponent, turn_total);
}

double PigValueTable::bellman_residual() const {
  double worst = 0.0;
  for (int i = 0; i < target_; ++i) {
    for (int j = 0; j < target_; ++j) {
      for (int k = 0; i + k < target_; ++k) {
        const double best = std::max(hold_value(i, j, k), roll_value(i, j, k));
        worst = std::max(worst, std::abs(best - p_[index(i, j, k)]));
      }
    }
  }
  return worst;
}

PigValueTable pig_solve(int target, double epsilon) {
  if (target < 2) engine::fail(engine::ErrorCode::kInvalidArgument, "pig target must be >= 2");
  PigValueTable table;
  table.target_ = target;
  const auto t = static_cast<std::size_t>(target);
  table.p_.assign(t * t * t, 0.0);

  // A state (i, j, k) only depends on states with i + j at least as large,
  // so layers are solved from the highest score sum down.
  for (int sum = 2 * (target - 1); sum >= 0; --sum) {
    const int lo = std::max(0, sum - (target - 1));
    const int hi = std::min(target - 1, sum);
    for (;;) {
      ++table.sweeps_;
      double change = 0.0;
      for (int i = lo; i <= hi; ++i) {
        const int j = sum - i;
        for (int k = target - 1 - i; k >= 0; --k) {
          double& p = table.p_[table.index(i, j, k)];
          const double next = std::max(table.hold_value(i, j, k), table.roll_value(i, j, k));
          change = std::max(change, std::abs(next - p));
          p = next;
        }
      }
      if (change >= epsilon) continue;
      double residual = 0.0;
      for (int i = lo; i <= hi; ++i) {
        const int j = sum - i;
        for (int k = 0; i + k < target; ++k) {
          const double best = std::max(table.hold_value(i, j, k), table.roll_value(i, j, k));
          residual = std::max(residual, std::abs(best - table.p_[table.index(i, j, k)]));
        }
      }
      if (residual < epsilon) break;
    }
  }
  return table;
}

const PigValueTable& pig_table(int target) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PigValueTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = tables[target];
  if (!slot) slot = std::make_unique<PigValueTable>(pig_solve(target));
  return *slot;
}

}  // namespace boardforge::ai
