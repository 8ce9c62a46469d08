#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twin/frame.hpp"
#include "twin/recording.hpp"
#include "twin/state_space.hpp"
#include "twin/types.hpp"

namespace twin {

/// Everything needed to render one labeled sensor recording for a parameter
/// draw. With a basis the reduced model is integrated; without it the
/// full-order model is.
struct SignalPipeline {
  const StructureModel* structure = nullptr;
  const StateSpace* space = nullptr;
  std::vector<std::pair<double, double>> op_ranges;
  double dt = 0.0;
  int steps = 0;
  double fs = 0.0;
  double snr = 0.0;
  const ReducedBasis* basis = nullptr;
};

// Noisy sensor recording of the structure at (region, delta) under the given
// operational parameters.
Recording simulate_recording(const SignalPipeline& pipe, const Vector& op, int region,
                             double delta, Rng& noise_rng);

struct DatasetItem {
  Recording recording;
  int label_region = 0;
  double label_delta = 0.0;
  int cell = 0;  // digital-state index of the labels
  Vector mu;     // operational params followed by (region, delta)
};

struct TrainingDataset {
  std::vector<DatasetItem> items;
};

// Labeled training data from the reduced-order pipeline. Non-stratified mode
// draws every parameter by Latin hypercube; stratified mode cycles the digital
// cells so each one receives near-equal coverage. Every sample owns a seed
// derived from (master_seed, index).
TrainingDataset build_training_dataset(const SignalPipeline& pipe, int n_samples, bool stratified,
                                       std::uint64_t master_seed);

// Full-order test set covering every digital cell per_cell times.
std::vector<std::pair<Recording, int>> build_test_set(const SignalPipeline& pipe, int per_cell,
                                                      std::uint64_t master_seed);

}  // namespace twin
