#pragma once

#include <vector>

#include "twin/state_space.hpp"
#include "twin/types.hpp"

namespace twin {

/// Hidden asset condition, unknown to the twin. region 0 means undamaged and
/// forces delta to 0.
struct GroundTruth {
  int region = 0;
  double delta = 0.0;
};

/// One stochastic deterioration process: per-step damage inception into a
/// uniformly chosen region, then Gaussian damage growth with negative
/// increments rounded to zero.
struct DegradationProcess {
  double inception_prob = 0.0;
  double inception_lo = 0.0;
  double inception_hi = 0.0;
  double growth_mean = 0.0;
  double growth_std = 0.0;
};

struct DegradationSpec {
  DegradationProcess normal;
  DegradationProcess restricted;  // in force while operations are restricted
  double delta_max = 0.8;
  int n_regions = 0;  // inception target set: regions 1..n_regions
};

enum class ActionKind { DoNothing, Restrict, ImperfectRepair, PerfectRepair };

/// Ground-truth effect of one control input.
struct ActionEffect {
  ActionKind kind = ActionKind::DoNothing;
  // Imperfect repair only: Gaussian delta decrement (negative mean improves).
  double decrement_mean = 0.0;
  double decrement_std = 0.0;
};

struct RepairSpec {
  std::vector<ActionEffect> per_action;  // indexed by action id
  // Below this damage level the asset counts as fully recovered.
  double recovery_threshold = 0.3;
};

// Advance the hidden condition one step under the last enacted action.
GroundTruth step_ground_truth(const GroundTruth& gt, int action, const DegradationSpec& degr,
                              const RepairSpec& rep, Rng& rng);

// Digital-state index of a ground-truth condition.
int discretize(const GroundTruth& gt, const StateSpace& space);

}  // namespace twin
