#pragma once

#include <Eigen/Dense>
#include <functional>
#include <random>
#include <vector>

namespace twin {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Probability vector over the digital-state lattice; entries sum to one.
using Belief = Eigen::VectorXd;

// Deterministic state -> action map produced by the planner.
struct Policy {
  std::vector<int> action;

  int n_states() const { return static_cast<int>(action.size()); }
};

// Nodal load on the free dofs as a function of time.
using LoadFunction = std::function<Vector(double)>;

using Rng = std::mt19937_64;

}  // namespace twin
