#pragma once

#include <optional>
#include <vector>

#include "twin/filter.hpp"
#include "twin/state_space.hpp"
#include "twin/types.hpp"

namespace twin {

/// Exponential health penalty scale*exp(rate*delta) + offset applied to a set
/// of damage regions. delta is a fraction in [0, 1].
struct HealthRule {
  std::vector<int> regions;
  double scale = -1.0;
  double rate = 0.0;
  double offset = 0.0;
};

/// Overrides the health reward when the representative delta reaches the
/// threshold (excessively compromised states).
struct CatastrophicClause {
  double threshold = 1.0;
  double penalty = 0.0;
};

struct RewardSpec {
  std::vector<double> control_rewards;  // indexed by action id
  double undamaged_health = 0.0;
  std::vector<HealthRule> health_rules;
  std::optional<CatastrophicClause> catastrophic;
  double alpha = 1.0;  // health weighting factor
};

// Health reward of a single state under the representative-delta convention.
double health_reward(const StateSpace& space, const RewardSpec& spec, int state);

// Per-state, per-action reward R(s,u) = control(u) + alpha * health(s).
Matrix build_reward_table(const StateSpace& space, const RewardSpec& spec);

struct ValueIterationResult {
  Vector values;
  Policy policy;
  int sweeps = 0;
  std::vector<double> residuals;  // sup-norm Bellman residual per sweep
};

// Infinite-horizon discounted value iteration from V = 0. Terminates when the
// Bellman residual drops to tol; throws NumericError past max_sweeps. The
// returned policy is greedy w.r.t. the returned values, ties toward the
// lowest action id.
ValueIterationResult value_iteration(const Matrix& rewards,
                                     const std::vector<TransitionModel>& models, double gamma,
                                     double tol = 1e-9, int max_sweeps = 100000);

// Greedy policy w.r.t. a given value function.
Policy greedy_policy(const Matrix& rewards, const std::vector<TransitionModel>& models,
                     double gamma, const Vector& values);

// Push-forward of a belief through a deterministic policy: p(u) = sum of
// belief mass over states mapped to u.
Vector control_belief(const Belief& belief, const Policy& policy, int n_actions);

// Best point estimate of the control distribution; ties toward the lowest id.
int select_action(const Vector& action_dist);

}  // namespace twin
