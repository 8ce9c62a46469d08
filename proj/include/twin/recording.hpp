#pragma once

#include <vector>

#include "twin/reduction.hpp"
#include "twin/types.hpp"

namespace twin {

/// Sensor selection: output channel n reads dof dofs[n]. Equivalent to a
/// Boolean selection table with exactly one 1 per row.
struct SensorMap {
  std::vector<int> dofs;

  int n_channels() const { return static_cast<int>(dofs.size()); }
  Matrix boolean_matrix(int n_dofs) const;
};

/// Multichannel sensor time series, one column per channel.
struct Recording {
  Matrix samples;  // L x N_u
  double fs = 0.0;
  double duration = 0.0;
};

// Select sensor rows from a full displacement history (n_dofs x L).
Recording extract_recording(const Matrix& history, const SensorMap& sensors, double fs);

// Integrate the reduced system with the same stepping scheme as the full
// model, lift through the basis and select the sensor dofs.
Recording rom_solve_and_extract(const ReducedModel& rm, const Matrix& W, const SensorMap& sensors,
                                const LoadFunction& f, double dt, int steps, double fs);

// Per-channel additive zero-mean Gaussian noise with variance set by the
// channel's mean-square signal over snr. Channels with zero power stay exact.
Recording add_noise(const Recording& rec, double snr, Rng& rng);

}  // namespace twin
