#include "twin/planner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twin/errors.hpp"

namespace twin {

double health_reward(const StateSpace& space, const RewardSpec& spec, int state) {
  const auto [region, interval] = space.region_interval(state);
  if (region == 0) return spec.undamaged_health;
  const double delta = space.interval_mid(interval);
  if (spec.catastrophic && delta >= spec.catastrophic->threshold) {
    return spec.catastrophic->penalty;
  }
  for (const auto& rule : spec.health_rules) {
    if (std::find(rule.regions.begin(), rule.regions.end(), region) != rule.regions.end()) {
      return rule.scale * std::exp(rule.rate * delta) + rule.offset;
    }
  }
  throw ConfigError("reward spec: no health rule covers region " + std::to_string(region));
}

Matrix build_reward_table(const StateSpace& space, const RewardSpec& spec) {
  const int nd = space.n_states();
  const int nu = static_cast<int>(spec.control_rewards.size());
  if (nu == 0) throw ConfigError("reward spec: empty action set");
  Matrix r(nd, nu);
  for (int s = 0; s < nd; ++s) {
    const double h = health_reward(space, spec, s);
    for (int u = 0; u < nu; ++u) {
      r(s, u) = spec.control_rewards[u] + spec.alpha * h;
    }
  }
  return r;
}

namespace {

// One Bellman backup: out(s) = max_u [R(s,u) + gamma * (T_u V)(s)].
void bellman_backup(const Matrix& rewards, const std::vector<TransitionModel>& models,
                    double gamma, const Vector& values, Vector& out, Policy* policy) {
  const Index nd = rewards.rows();
  const Index nu = rewards.cols();
  for (Index s = 0; s < nd; ++s) {
    double best = -std::numeric_limits<double>::infinity();
    int best_u = 0;
    for (Index u = 0; u < nu; ++u) {
      const double q = rewards(s, u) + gamma * models[static_cast<std::size_t>(u)].table.row(s).dot(values);
      if (q > best) {
        best = q;
        best_u = static_cast<int>(u);
      }
    }
    out(s) = best;
    if (policy) policy->action[static_cast<std::size_t>(s)] = best_u;
  }
}

}  // namespace

ValueIterationResult value_iteration(const Matrix& rewards,
                                     const std::vector<TransitionModel>& models, double gamma,
                                     double tol, int max_sweeps) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw ConfigError("value iteration: gamma must lie in [0, 1)");
  }
  if (tol <= 0.0) throw ConfigError("value iteration: tol must be positive");
  if (models.size() != static_cast<std::size_t>(rewards.cols())) {
    throw ConfigError("value iteration: one transition model per action required");
  }
  for (const auto& m : models) {
    if (m.table.rows() != rewards.rows() || m.table.cols() != rewards.rows()) {
      throw ConfigError("value iteration: transition table dimension mismatch");
    }
  }

  ValueIterationResult res;
  res.values = Vector::Zero(rewards.rows());
  Vector next(rewards.rows());
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bellman_backup(rewards, models, gamma, res.values, next, nullptr);
    const double resid = (next - res.values).lpNorm<Eigen::Infinity>();
    res.residuals.push_back(resid);
    res.values.swap(next);
    res.sweeps = sweep;
    if (resid <= tol) {
      res.policy = greedy_policy(rewards, models, gamma, res.values);
      return res;
    }
  }
  throw NumericError("value iteration: no convergence within max_sweeps");
}

Policy greedy_policy(const Matrix& rewards, const std::vector<TransitionModel>& models,
                     double gamma, const Vector& values) {
  Policy policy;
  policy.action.assign(static_cast<std::size_t>(rewards.rows()), 0);
  Vector scratch(rewards.rows());
  bellman_backup(rewards, models, gamma, values, scratch, &policy);
  return policy;
}

Vector control_belief(const Belief& belief, const Policy& policy, int n_actions) {
  if (policy.n_states() != belief.size()) {
    throw ConfigError("control_belief: policy/belief dimension mismatch");
  }
  Vector dist = Vector::Zero(n_actions);
  for (Index s = 0; s < belief.size(); ++s) {
    const int u = policy.action[static_cast<std::size_t>(s)];
    if (u < 0 || u >= n_actions) {
      throw ConfigError("control_belief: policy references unknown action");
    }
    dist(u) += belief(s);
  }
  return dist;
}

int select_action(const Vector& action_dist) {
  int best = 0;
  for (Index u = 1; u < action_dist.size(); ++u) {
    if (action_dist(u) > action_dist(best)) best = static_cast<int>(u);
  }
  return best;
}

}  // namespace twin
