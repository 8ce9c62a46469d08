#include "twin/dataset.hpp"

#include <string>

#include "twin/errors.hpp"
#include "twin/newmark.hpp"
#include "twin/sampling.hpp"

namespace twin {

Recording simulate_recording(const SignalPipeline& pipe, const Vector& op, int region,
                             double delta, Rng& noise_rng) {
  const FEModel& fe = pipe.structure->fe;
  const Matrix K = damaged_stiffness(fe, region, delta);
  const Matrix C = rayleigh_damping(fe, K);
  const LoadFunction f = make_load(*pipe.structure, op);
  SensorMap sensors{pipe.structure->sensor_dofs};

  Recording clean;
  if (pipe.basis) {
    const ReducedModel rm = galerkin_reduce(fe.M, C, K, fe.x0, fe.v0, pipe.basis->W);
    clean = rom_solve_and_extract(rm, pipe.basis->W, sensors, f, pipe.dt, pipe.steps, pipe.fs);
  } else {
    const Matrix history = newmark_integrate(fe.M, C, K, f, fe.x0, fe.v0, pipe.dt, pipe.steps);
    clean = extract_recording(history, sensors, pipe.fs);
  }
  return add_noise(clean, pipe.snr, noise_rng);
}

namespace {

// (region, delta) of a digital cell; delta drawn uniformly inside the cell.
std::pair<int, double> sample_cell_condition(const StateSpace& space, int cell, Rng& rng) {
  if (cell == 0) return {0, 0.0};
  const auto [region, interval] = space.region_interval(cell);
  std::uniform_real_distribution<double> level(space.interval_lo(interval),
                                               space.interval_hi(interval));
  return {region, level(rng)};
}

}  // namespace

TrainingDataset build_training_dataset(const SignalPipeline& pipe, int n_samples, bool stratified,
                                       std::uint64_t master_seed) {
  if (n_samples < 1) throw ConfigError("build_training_dataset: need n_samples >= 1");
  const StateSpace& space = *pipe.space;

  // Latin-hypercube plan over (operational params, region, delta); the region
  // margin includes the undamaged baseline.
  Matrix lhs;
  if (!stratified) {
    auto ranges = pipe.op_ranges;
    ranges.push_back({0.0, 1.0});  // region coordinate
    ranges.push_back({space.delta_min(), space.delta_max()});
    Rng plan_rng(derive_seed(master_seed, SeedStream::Dataset, 0));
    lhs = latin_hypercube(ranges, n_samples, plan_rng);
  }

  TrainingDataset ds;
  ds.items.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    Rng rng(derive_seed(master_seed, SeedStream::Dataset, static_cast<std::uint64_t>(i) + 1));
    DatasetItem item;
    Vector op;
    if (stratified) {
      const int cell = i % space.n_states();
      std::tie(item.label_region, item.label_delta) = sample_cell_condition(space, cell, rng);
      op = sample_operational_params(pipe.op_ranges, rng);
    } else {
      op = lhs.row(i).head(static_cast<Index>(pipe.op_ranges.size())).transpose();
      const double region_coord = lhs(i, static_cast<Index>(pipe.op_ranges.size()));
      item.label_region =
          std::min(static_cast<int>(region_coord * (space.n_regions() + 1)), space.n_regions());
      item.label_delta =
          item.label_region == 0 ? 0.0 : lhs(i, static_cast<Index>(pipe.op_ranges.size()) + 1);
    }
    item.cell = discretize({item.label_region, item.label_delta}, space);
    item.mu.resize(op.size() + 2);
    item.mu << op, static_cast<double>(item.label_region), item.label_delta;
    try {
      item.recording = simulate_recording(pipe, op, item.label_region, item.label_delta, rng);
    } catch (const std::exception& e) {
      throw NumericError("dataset sample " + std::to_string(i) + ": " + e.what());
    }
    ds.items.push_back(std::move(item));
  }
  return ds;
}

std::vector<std::pair<Recording, int>> build_test_set(const SignalPipeline& pipe, int per_cell,
                                                      std::uint64_t master_seed) {
  if (per_cell < 1) throw ConfigError("build_test_set: need per_cell >= 1");
  const StateSpace& space = *pipe.space;
  std::vector<std::pair<Recording, int>> out;
  out.reserve(static_cast<std::size_t>(per_cell) * space.n_states());
  std::uint64_t idx = 0;
  for (int cell = 0; cell < space.n_states(); ++cell) {
    for (int rep = 0; rep < per_cell; ++rep, ++idx) {
      Rng rng(derive_seed(master_seed, SeedStream::TestSet, idx));
      const auto [region, delta] = sample_cell_condition(space, cell, rng);
      const Vector op = sample_operational_params(pipe.op_ranges, rng);
      try {
        out.emplace_back(simulate_recording(pipe, op, region, delta, rng), cell);
      } catch (const std::exception& e) {
        throw NumericError("test sample " + std::to_string(idx) + ": " + e.what());
      }
    }
  }
  return out;
}

}  // namespace twin
