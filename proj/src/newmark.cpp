#include "twin/newmark.hpp"

#include "twin/errors.hpp"

namespace twin {

Matrix newmark_integrate(const Matrix& M, const Matrix& C, const Matrix& K,
                         const LoadFunction& f, const Vector& x0, const Vector& v0, double dt,
                         int steps) {
  const Index n = M.rows();
  if (K.rows() != n || C.rows() != n || x0.size() != n || v0.size() != n) {
    throw ConfigError("newmark: system dimension mismatch");
  }
  if (!(dt > 0.0) || steps < 1) throw ConfigError("newmark: need dt > 0 and steps >= 1");

  constexpr double beta = kNewmarkBeta;
  constexpr double gamma = kNewmarkGamma;
  const double c0 = 1.0 / (beta * dt * dt);
  const double c1 = gamma / (beta * dt);
  const double c2 = 1.0 / (beta * dt);
  const double c3 = 1.0 / (2.0 * beta) - 1.0;
  const double c4 = gamma / beta - 1.0;
  const double c5 = dt * (gamma / (2.0 * beta) - 1.0);

  // Initial acceleration from the equation of motion at t = 0.
  Eigen::LDLT<Matrix> mass_solver(M);
  if (mass_solver.info() != Eigen::Success) {
    throw NumericError("newmark: mass factorization failed");
  }
  Vector a = mass_solver.solve(f(0.0) - C * v0 - K * x0);

  const Matrix k_eff = K + c0 * M + c1 * C;
  Eigen::LDLT<Matrix> solver(k_eff);
  if (solver.info() != Eigen::Success) {
    throw NumericError("newmark: effective stiffness factorization failed");
  }

  Matrix history(n, steps);
  Vector x = x0;
  Vector v = v0;
  for (int l = 1; l <= steps; ++l) {
    const double t = l * dt;
    const Vector rhs = f(t) + M * (c0 * x + c2 * v + c3 * a) + C * (c1 * x + c4 * v + c5 * a);
    const Vector x_new = solver.solve(rhs);
    const Vector a_new = c0 * (x_new - x) - c2 * v - c3 * a;
    v += dt * ((1.0 - gamma) * a + gamma * a_new);
    x = x_new;
    a = a_new;
    history.col(l - 1) = x;
  }
  return history;
}

}  // namespace twin
