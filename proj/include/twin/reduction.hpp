#pragma once

#include "twin/types.hpp"

namespace twin {

/// Orthonormal projection basis obtained from solution snapshots.
struct ReducedBasis {
  Matrix W;                // n_dofs x n_modes, orthonormal columns
  Vector singular_values;  // all of them, non-increasing
  double retained_energy = 1.0;
};

// Energy-based truncation: keep the smallest mode count whose disregarded
// energy fraction (sum of squared trailing singular values over the total)
// does not exceed eps.
ReducedBasis pod_basis(const Matrix& snapshots, double eps);

struct ReducedModel {
  Matrix M, C, K;
  Vector x0, v0;
};

// Galerkin projection of the second-order system onto the basis columns.
ReducedModel galerkin_reduce(const Matrix& M, const Matrix& C, const Matrix& K, const Vector& x0,
                             const Vector& v0, const Matrix& W);

}  // namespace twin
