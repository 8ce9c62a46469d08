#include "twin/reduction.hpp"

#include <Eigen/SVD>

#include "twin/errors.hpp"

namespace twin {

ReducedBasis pod_basis(const Matrix& snapshots, double eps) {
  if (snapshots.size() == 0) throw ConfigError("pod_basis: empty snapshot matrix");
  if (eps < 0.0 || eps >= 1.0) throw ConfigError("pod_basis: eps must lie in [0, 1)");

  Eigen::BDCSVD<Matrix> svd(snapshots, Eigen::ComputeThinU);
  const Vector& sigma = svd.singularValues();
  const double total = sigma.squaredNorm();
  if (total <= 0.0) throw NumericError("pod_basis: all-zero snapshot matrix");

  // Smallest r with trailing energy fraction <= eps.
  Index r = sigma.size();
  double trailing = 0.0;
  for (Index k = sigma.size(); k >= 1; --k) {
    const double with_k = trailing + sigma(k - 1) * sigma(k - 1);
    if (with_k / total <= eps) {
      trailing = with_k;
      r = k - 1;
    } else {
      break;
    }
  }
  if (r == 0) r = 1;

  ReducedBasis basis;
  basis.W = svd.matrixU().leftCols(r);
  basis.singular_values = sigma;
  basis.retained_energy = 1.0 - trailing / total;
  return basis;
}

ReducedModel galerkin_reduce(const Matrix& M, const Matrix& C, const Matrix& K, const Vector& x0,
                             const Vector& v0, const Matrix& W) {
  if (W.rows() != M.rows() || K.rows() != M.rows() || C.rows() != M.rows() ||
      x0.size() != M.rows() || v0.size() != M.rows()) {
    throw ConfigError("galerkin_reduce: dimension mismatch");
  }
  ReducedModel rm;
  rm.M = W.transpose() * M * W;
  rm.C = W.transpose() * C * W;
  rm.K = W.transpose() * K * W;
  rm.x0 = W.transpose() * x0;
  rm.v0 = W.transpose() * v0;
  return rm;
}

}  // namespace twin
