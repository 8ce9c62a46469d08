#pragma once

#include <string>
#include <utility>
#include <vector>

namespace twin {

/// Discrete digital-state lattice over (damage region, damage interval).
///
/// State 0 is the undamaged baseline. Damage in region j (1-based) at
/// interval k (1-based) maps to index (j-1)*n_intervals + k, i.e. states are
/// sorted first by region and then by damage level.
class StateSpace {
 public:
  // interval_bounds are the n_intervals+1 edges of contiguous, strictly
  // increasing damage-fraction intervals, e.g. {0.30, 0.35, ..., 0.80}.
  StateSpace(int n_regions, std::vector<double> interval_bounds);

  int n_regions() const { return n_regions_; }
  int n_intervals() const { return static_cast<int>(bounds_.size()) - 1; }
  int n_states() const { return 1 + n_intervals() * n_regions_; }

  int index_of(int region, int interval) const;
  // Inverse of index_of; state 0 yields (0, 0).
  std::pair<int, int> region_interval(int state) const;

  double interval_lo(int interval) const { return bounds_[interval - 1]; }
  double interval_hi(int interval) const { return bounds_[interval]; }
  // Representative damage level of an interval (midpoint convention).
  double interval_mid(int interval) const;
  // Representative damage level of a state; 0 for the undamaged state.
  double representative_delta(int state) const;

  double delta_min() const { return bounds_.front(); }
  double delta_max() const { return bounds_.back(); }
  const std::vector<double>& bounds() const { return bounds_; }

  // Interval containing delta. Intervals are closed below and open above,
  // except the last one which is closed on both ends.
  int interval_containing(double delta) const;

  // Canonical content hash; used to reject mixed artifact bundles.
  std::string hash() const;

 private:
  int n_regions_;
  std::vector<double> bounds_;
};

}  // namespace twin
