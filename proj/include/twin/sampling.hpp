#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twin/types.hpp"

namespace twin {

// Stable stream tags for deriving independent per-stage seeds from one master
// seed; every stage and every sample owns a reproducible stream.
enum class SeedStream : std::uint64_t {
  SnapshotSampling = 1,
  Dataset = 2,
  TestSet = 3,
  OnlineGroundTruth = 4,
  OnlineObservations = 5,
  Prediction = 6,
};

std::uint64_t derive_seed(std::uint64_t master, SeedStream stream, std::uint64_t index);

// n samples with exactly one draw per equiprobable stratum in every margin.
// Returns an n x ranges.size() matrix.
Matrix latin_hypercube(const std::vector<std::pair<double, double>>& ranges, int n, Rng& rng);

// Independent uniform draws, one per range.
Vector sample_operational_params(const std::vector<std::pair<double, double>>& ranges, Rng& rng);

}  // namespace twin
