#pragma once

#include "twin/types.hpp"

namespace twin {

// Constant average acceleration (trapezoidal family, unconditionally stable).
inline constexpr double kNewmarkBeta = 0.25;
inline constexpr double kNewmarkGamma = 0.5;

// Implicit linear stepping of M x'' + C x' + K x = f(t) from (x0, v0).
// Returns the displacement history as columns x_1..x_L at t = dt..L*dt.
Matrix newmark_integrate(const Matrix& M, const Matrix& C, const Matrix& K,
                         const LoadFunction& f, const Vector& x0, const Vector& v0, double dt,
                         int steps);

}  // namespace twin
