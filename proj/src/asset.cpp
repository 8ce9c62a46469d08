#include "twin/asset.hpp"

#include <algorithm>
#include <string>

#include "twin/errors.hpp"

namespace twin {

namespace {

GroundTruth degrade(const GroundTruth& gt, const DegradationProcess& proc, double delta_max,
                    int n_regions, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (gt.region == 0) {
    if (unit(rng) < proc.inception_prob) {
      std::uniform_int_distribution<int> region(1, n_regions);
      std::uniform_real_distribution<double> level(proc.inception_lo, proc.inception_hi);
      const int j = region(rng);
      return {j, std::min(level(rng), delta_max)};
    }
    return {0, 0.0};
  }
  std::normal_distribution<double> growth(proc.growth_mean, proc.growth_std);
  const double inc = std::max(0.0, growth(rng));  // negative increments round to zero
  return {gt.region, std::min(gt.delta + inc, delta_max)};
}

}  // namespace

GroundTruth step_ground_truth(const GroundTruth& gt, int action, const DegradationSpec& degr,
                              const RepairSpec& rep, Rng& rng) {
  if (action < 0 || action >= static_cast<int>(rep.per_action.size())) {
    throw ConfigError("step_ground_truth: action " + std::to_string(action) +
                      " has no ground-truth effect");
  }
  if (degr.n_regions < 1) {
    throw ConfigError("step_ground_truth: degradation spec has no inception regions");
  }
  const ActionEffect& effect = rep.per_action[static_cast<std::size_t>(action)];
  switch (effect.kind) {
    case ActionKind::DoNothing:
      return degrade(gt, degr.normal, degr.delta_max, degr.n_regions, rng);
    case ActionKind::Restrict:
      return degrade(gt, degr.restricted, degr.delta_max, degr.n_regions, rng);
    case ActionKind::PerfectRepair:
      return {0, 0.0};
    case ActionKind::ImperfectRepair: {
      if (gt.region == 0) return {0, 0.0};
      std::normal_distribution<double> dec(effect.decrement_mean, effect.decrement_std);
      const double step = std::min(0.0, dec(rng));  // repairs never worsen the asset
      const double next = gt.delta + step;
      if (next < rep.recovery_threshold) return {0, 0.0};
      return {gt.region, next};
    }
  }
  throw ConfigError("step_ground_truth: unknown action kind");
}

int discretize(const GroundTruth& gt, const StateSpace& space) {
  if (gt.region == 0) return 0;
  if (gt.region < 1 || gt.region > space.n_regions()) {
    throw NumericError("discretize: ground-truth region outside the state space");
  }
  if (gt.delta < space.delta_min()) {
    throw NumericError("discretize: damaged asset below the smallest damage interval");
  }
  return space.index_of(gt.region, space.interval_containing(gt.delta));
}

}  // namespace twin
