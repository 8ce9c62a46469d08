#include "twin/state_space.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>

#include "twin/errors.hpp"

namespace twin {

StateSpace::StateSpace(int n_regions, std::vector<double> interval_bounds)
    : n_regions_(n_regions), bounds_(std::move(interval_bounds)) {
  if (n_regions_ < 1) {
    throw ConfigError("state space: n_regions must be >= 1");
  }
  if (bounds_.size() < 2) {
    throw ConfigError("state space: need at least one damage interval");
  }
  for (std::size_t i = 1; i < bounds_.size(); ++i) {
    if (!(bounds_[i] > bounds_[i - 1])) {
      throw ConfigError("state space: interval bounds must be strictly increasing");
    }
  }
}

int StateSpace::index_of(int region, int interval) const {
  if (region < 1 || region > n_regions_ || interval < 1 || interval > n_intervals()) {
    throw ConfigError("state space: (region, interval) out of range");
  }
  return (region - 1) * n_intervals() + interval;
}

std::pair<int, int> StateSpace::region_interval(int state) const {
  if (state < 0 || state >= n_states()) {
    throw ConfigError("state space: state index out of range");
  }
  if (state == 0) return {0, 0};
  const int z = state - 1;
  return {z / n_intervals() + 1, z % n_intervals() + 1};
}

double StateSpace::interval_mid(int interval) const {
  return 0.5 * (interval_lo(interval) + interval_hi(interval));
}

double StateSpace::representative_delta(int state) const {
  const auto [region, interval] = region_interval(state);
  return region == 0 ? 0.0 : interval_mid(interval);
}

int StateSpace::interval_containing(double delta) const {
  if (delta < delta_min() || delta > delta_max()) {
    throw NumericError("state space: damage level outside discretized range");
  }
  for (int k = 1; k < n_intervals(); ++k) {
    if (delta < bounds_[k]) return k;
  }
  return n_intervals();  // right edge belongs to the last interval
}

std::string StateSpace::hash() const {
  // FNV-1a over a canonical rendering of the definition.
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&h](const char* s) {
    for (; *s; ++s) {
      h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(*s));
      h *= 1099511628211ull;
    }
  };
  char buf[64];
  std::snprintf(buf, sizeof(buf), "regions=%d;", n_regions_);
  mix(buf);
  for (double b : bounds_) {
    std::snprintf(buf, sizeof(buf), "%.17g;", b);
    mix(buf);
  }
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

}  // namespace twin
