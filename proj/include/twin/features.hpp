#pragma once

#include "twin/recording.hpp"
#include "twin/types.hpp"

namespace twin {

// Numerical floor for empty spectral bands before taking the log.
inline constexpr double kBandEnergyFloor = 1e-30;

// Per-channel log mean band energies of the one-sided magnitude spectrum,
// n_bands equal-width bands. Returns an N_u x n_bands matrix. Requires the
// recording length to be at least 2 * n_bands.
Matrix extract_features(const Recording& rec, int n_bands);

// Flattened (channel-major) feature vector.
Vector feature_vector(const Recording& rec, int n_bands);

}  // namespace twin
