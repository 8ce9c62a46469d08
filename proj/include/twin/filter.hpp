#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twin/state_space.hpp"
#include "twin/types.hpp"

namespace twin {

/// Control-dependent transition table: row i holds p(next = j | current = i).
struct TransitionModel {
  int action = 0;
  Matrix table;
};

/// Observation channel of the classifier: row e holds p(true state | estimate e).
struct ConfusionCPT {
  Matrix table;
};

struct CptViolation {
  Index row = 0;
  std::string message;
};

// Row-stochasticity and [0,1] range check; reports the first violating row.
std::optional<CptViolation> validate_cpt(const Matrix& table, double tol = 1e-12);

// Push the belief one step forward through the transition table.
Belief transition_predict(const Belief& prior, const TransitionModel& model);

// One filtering step: transition under the last enacted action, then one
// likelihood factor per classifier estimate, treated as conditionally
// independent given the digital state. Throws EvidenceError when the
// unnormalized posterior vanishes everywhere.
Belief assimilate_step(const Belief& prior, const std::vector<int>& estimates,
                       const TransitionModel& model, const ConfusionCPT& cpt);

// Argmax of a belief; ties resolved toward the lowest state index.
int map_state(const Belief& belief);

struct PredictionStep {
  Belief belief;       // p(D_t)
  Vector action_dist;  // p(U_t) under the policy
};

// Closed-loop forecast: at each step the action distribution is the policy
// push-forward of the current belief, and the belief advances per-state under
// the policy's action. No data factors are applied while forecasting.
// Returns horizon+1 entries; entry 0 is the start belief.
std::vector<PredictionStep> predict_closed_loop(const Belief& start, const Policy& policy,
                                                const std::vector<TransitionModel>& models,
                                                int horizon);

// -- Transition-table builders for the standard action families ------------

// Stochastic deterioration: from the undamaged state, damage may start in any
// region with probability `rate` (lowest interval); damaged states grow to
// the next interval with the same probability; the last interval is absorbing.
TransitionModel make_degradation_transition(const StateSpace& space, int action, double rate);

// Stochastic repair: improve_probs[m] is the probability of improving by m
// intervals; improvements past the lowest interval land on the undamaged state.
TransitionModel make_improvement_transition(const StateSpace& space, int action,
                                            const std::vector<double>& improve_probs);

// Perfect maintenance: every state maps to the undamaged state.
TransitionModel make_reset_transition(const StateSpace& space, int action);

/// One assimilation step as logged by the online run history.
struct StepRecord {
  int t = 0;
  int action_enacted = 0;
  std::vector<int> estimates;
  Belief posterior;
  int map_state = 0;
  double reward = 0.0;
};

}  // namespace twin
