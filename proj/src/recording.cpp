#include "twin/recording.hpp"

#include <cmath>

#include "twin/errors.hpp"
#include "twin/newmark.hpp"

namespace twin {

Matrix SensorMap::boolean_matrix(int n_dofs) const {
  Matrix t = Matrix::Zero(n_channels(), n_dofs);
  for (int n = 0; n < n_channels(); ++n) {
    t(n, dofs[static_cast<std::size_t>(n)]) = 1.0;
  }
  return t;
}

Recording extract_recording(const Matrix& history, const SensorMap& sensors, double fs) {
  Recording rec;
  rec.fs = fs;
  rec.duration = static_cast<double>(history.cols()) / fs;
  rec.samples.resize(history.cols(), sensors.n_channels());
  for (int n = 0; n < sensors.n_channels(); ++n) {
    const int dof = sensors.dofs[static_cast<std::size_t>(n)];
    if (dof < 0 || dof >= history.rows()) {
      throw ConfigError("extract_recording: sensor dof out of range");
    }
    rec.samples.col(n) = history.row(dof).transpose();
  }
  return rec;
}

Recording rom_solve_and_extract(const ReducedModel& rm, const Matrix& W, const SensorMap& sensors,
                                const LoadFunction& f, double dt, int steps, double fs) {
  const LoadFunction f_reduced = [&W, &f](double t) { return Vector(W.transpose() * f(t)); };
  const Matrix coeffs = newmark_integrate(rm.M, rm.C, rm.K, f_reduced, rm.x0, rm.v0, dt, steps);

  // Lift only the sensor rows of the basis.
  Matrix w_sensors(sensors.n_channels(), W.cols());
  for (int n = 0; n < sensors.n_channels(); ++n) {
    const int dof = sensors.dofs[static_cast<std::size_t>(n)];
    if (dof < 0 || dof >= W.rows()) {
      throw ConfigError("rom_solve_and_extract: sensor dof out of range");
    }
    w_sensors.row(n) = W.row(dof);
  }
  Recording rec;
  rec.fs = fs;
  rec.duration = steps / fs;
  rec.samples = (w_sensors * coeffs).transpose();
  return rec;
}

Recording add_noise(const Recording& rec, double snr, Rng& rng) {
  if (!(snr > 0.0)) throw ConfigError("add_noise: snr must be positive");
  Recording out = rec;
  std::normal_distribution<double> unit(0.0, 1.0);
  for (Index ch = 0; ch < rec.samples.cols(); ++ch) {
    const double mean_square = rec.samples.col(ch).squaredNorm() / rec.samples.rows();
    const double sigma = std::sqrt(mean_square / snr);
    if (sigma == 0.0) continue;
    for (Index l = 0; l < rec.samples.rows(); ++l) {
      out.samples(l, ch) += sigma * unit(rng);
    }
  }
  return out;
}

}  // namespace twin
