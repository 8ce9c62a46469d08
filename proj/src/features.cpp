#include "twin/features.hpp"

#include <cmath>

#include "twin/errors.hpp"

namespace twin {

Matrix extract_features(const Recording& rec, int n_bands) {
  const Index L = rec.samples.rows();
  const Index n_ch = rec.samples.cols();
  if (n_bands < 1 || L < 2 * n_bands) {
    throw ConfigError("extract_features: recording too short for the requested bands");
  }

  // One-sided DFT as two real matrix products; bin 0 (static offset) is
  // dropped so features respond to vibration content only.
  const Index n_bins = L / 2;
  Matrix cos_part(n_bins, L);
  Matrix sin_part(n_bins, L);
  for (Index k = 1; k <= n_bins; ++k) {
    for (Index l = 0; l < L; ++l) {
      const double arg = 2.0 * M_PI * static_cast<double>(k) * static_cast<double>(l) /
                         static_cast<double>(L);
      cos_part(k - 1, l) = std::cos(arg);
      sin_part(k - 1, l) = std::sin(arg);
    }
  }
  const Matrix re = cos_part * rec.samples;  // n_bins x N_u
  const Matrix im = sin_part * rec.samples;
  const Matrix power = re.cwiseAbs2() + im.cwiseAbs2();

  Matrix features(n_ch, n_bands);
  for (Index ch = 0; ch < n_ch; ++ch) {
    for (int b = 0; b < n_bands; ++b) {
      const Index lo = static_cast<Index>(b) * n_bins / n_bands;
      const Index hi = static_cast<Index>(b + 1) * n_bins / n_bands;
      const double mean_energy = power.col(ch).segment(lo, hi - lo).mean();
      features(ch, b) = std::log(std::max(mean_energy, kBandEnergyFloor));
    }
  }
  return features;
}

Vector feature_vector(const Recording& rec, int n_bands) {
  const Matrix f = extract_features(rec, n_bands);
  Vector out(f.size());
  Index at = 0;
  for (Index ch = 0; ch < f.rows(); ++ch) {
    out.segment(at, f.cols()) = f.row(ch).transpose();
    at += f.cols();
  }
  return out;
}

}  // namespace twin
