#include "twin/filter.hpp"

#include <cmath>

#include "twin/errors.hpp"
#include "twin/planner.hpp"

namespace twin {

std::optional<CptViolation> validate_cpt(const Matrix& table, double tol) {
  if (table.rows() == 0 || table.rows() != table.cols()) {
    return CptViolation{0, "table must be square and nonempty"};
  }
  for (Index i = 0; i < table.rows(); ++i) {
    double sum = 0.0;
    for (Index j = 0; j < table.cols(); ++j) {
      const double v = table(i, j);
      if (!(v >= 0.0 && v <= 1.0) || !std::isfinite(v)) {
        return CptViolation{i, "entry outside [0, 1]"};
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) {
      return CptViolation{i, "row does not sum to 1"};
    }
  }
  return std::nullopt;
}

Belief transition_predict(const Belief& prior, const TransitionModel& model) {
  if (prior.size() != model.table.rows()) {
    throw ConfigError("transition_predict: belief/table dimension mismatch");
  }
  Belief out = model.table.transpose() * prior;
  const double sum = out.sum();
  if (sum <= 0.0) {
    throw EvidenceError("transition_predict: predicted belief has no mass");
  }
  return out / sum;
}

Belief assimilate_step(const Belief& prior, const std::vector<int>& estimates,
                       const TransitionModel& model, const ConfusionCPT& cpt) {
  if (estimates.empty()) {
    throw ConfigError("assimilate_step: estimate batch is empty");
  }
  if (cpt.table.rows() != prior.size() || cpt.table.cols() != prior.size()) {
    throw ConfigError("assimilate_step: CPT dimension mismatch");
  }
  Belief post = transition_predict(prior, model);
  // Fold in one likelihood factor per estimate, renormalizing as we go so a
  // long batch cannot underflow.
  for (int e : estimates) {
    if (e < 0 || e >= cpt.table.rows()) {
      throw ConfigError("assimilate_step: estimate index out of range");
    }
    post = post.cwiseProduct(cpt.table.row(e).transpose());
    const double sum = post.sum();
    if (sum <= 0.0) {
      throw EvidenceError("assimilate_step: evidence left zero posterior mass in every state");
    }
    post /= sum;
  }
  return post;
}

int map_state(const Belief& belief) {
  int best = 0;
  for (Index i = 1; i < belief.size(); ++i) {
    if (belief(i) > belief(best)) best = static_cast<int>(i);
  }
  return best;
}

std::vector<PredictionStep> predict_closed_loop(const Belief& start, const Policy& policy,
                                                const std::vector<TransitionModel>& models,
                                                int horizon) {
  if (horizon < 0) {
    throw ConfigError("predict_closed_loop: horizon must be >= 0");
  }
  if (policy.n_states() != start.size()) {
    throw ConfigError("predict_closed_loop: policy/belief dimension mismatch");
  }
  const int n_actions = static_cast<int>(models.size());
  std::vector<PredictionStep> out;
  out.reserve(static_cast<std::size_t>(horizon) + 1);

  Belief b = start;
  out.push_back({b, control_belief(b, policy, n_actions)});
  for (int t = 0; t < horizon; ++t) {
    Belief next = Belief::Zero(b.size());
    for (Index i = 0; i < b.size(); ++i) {
      if (b(i) == 0.0) continue;
      const int u = policy.action[static_cast<std::size_t>(i)];
      if (u < 0 || u >= n_actions) {
        throw ConfigError("predict_closed_loop: policy references unknown action");
      }
      next += b(i) * models[static_cast<std::size_t>(u)].table.row(i).transpose();
    }
    const double sum = next.sum();
    if (sum <= 0.0) {
      throw EvidenceError("predict_closed_loop: forecast belief has no mass");
    }
    b = next / sum;
    out.push_back({b, control_belief(b, policy, n_actions)});
  }
  return out;
}

TransitionModel make_degradation_transition(const StateSpace& space, int action, double rate) {
  const int nd = space.n_states();
  const int ny = space.n_regions();
  const int nk = space.n_intervals();
  if (rate < 0.0 || rate * ny > 1.0) {
    throw ConfigError("degradation transition: inception rate must satisfy 0 <= n_regions*rate <= 1");
  }
  Matrix t = Matrix::Zero(nd, nd);
  t(0, 0) = 1.0 - rate * ny;
  for (int j = 1; j <= ny; ++j) {
    t(0, space.index_of(j, 1)) = rate;
  }
  for (int j = 1; j <= ny; ++j) {
    for (int k = 1; k <= nk; ++k) {
      const int s = space.index_of(j, k);
      if (k < nk) {
        t(s, s) = 1.0 - rate;
        t(s, space.index_of(j, k + 1)) = rate;
      } else {
        t(s, s) = 1.0;  // worst interval is absorbing under deterioration
      }
    }
  }
  return {action, std::move(t)};
}

TransitionModel make_improvement_transition(const StateSpace& space, int action,
                                            const std::vector<double>& improve_probs) {
  const int nd = space.n_states();
  double total = 0.0;
  for (double p : improve_probs) {
    if (p < 0.0) throw ConfigError("improvement transition: negative probability");
    total += p;
  }
  if (improve_probs.empty() || std::abs(total - 1.0) > 1e-12) {
    throw ConfigError("improvement transition: probabilities must sum to 1");
  }
  Matrix t = Matrix::Zero(nd, nd);
  t(0, 0) = 1.0;
  for (int s = 1; s < nd; ++s) {
    const auto [j, k] = space.region_interval(s);
    for (std::size_t m = 0; m < improve_probs.size(); ++m) {
      const int k_new = k - static_cast<int>(m);
      const int target = k_new >= 1 ? space.index_of(j, k_new) : 0;
      t(s, target) += improve_probs[m];
    }
  }
  return {action, std::move(t)};
}

TransitionModel make_reset_transition(const StateSpace& space, int action) {
  const int nd = space.n_states();
  Matrix t = Matrix::Zero(nd, nd);
  t.col(0).setOnes();
  return {action, std::move(t)};
}

}  // namespace twin
