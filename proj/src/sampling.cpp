#include "twin/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "twin/errors.hpp"

namespace twin {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, SeedStream stream, std::uint64_t index) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ static_cast<std::uint64_t>(stream));
  h = splitmix64(h ^ index);
  return h;
}

Matrix latin_hypercube(const std::vector<std::pair<double, double>>& ranges, int n, Rng& rng) {
  if (n < 1) throw ConfigError("latin_hypercube: need n >= 1");
  const int dim = static_cast<int>(ranges.size());
  Matrix samples(n, dim);
  std::vector<int> strata(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int d = 0; d < dim; ++d) {
    const auto [lo, hi] = ranges[static_cast<std::size_t>(d)];
    if (!(hi >= lo)) throw ConfigError("latin_hypercube: invalid range");
    std::iota(strata.begin(), strata.end(), 0);
    std::shuffle(strata.begin(), strata.end(), rng);
    for (int i = 0; i < n; ++i) {
      const double u = (strata[static_cast<std::size_t>(i)] + unit(rng)) / n;
      samples(i, d) = lo + u * (hi - lo);
    }
  }
  return samples;
}

Vector sample_operational_params(const std::vector<std::pair<double, double>>& ranges, Rng& rng) {
  Vector out(static_cast<Index>(ranges.size()));
  for (std::size_t d = 0; d < ranges.size(); ++d) {
    const auto [lo, hi] = ranges[d];
    if (!(hi >= lo)) throw ConfigError("sample_operational_params: invalid range");
    if (hi == lo) {
      out(static_cast<Index>(d)) = lo;
    } else {
      std::uniform_real_distribution<double> dist(lo, hi);
      out(static_cast<Index>(d)) = dist(rng);
    }
  }
  return out;
}

}  // namespace twin
