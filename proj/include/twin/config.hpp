#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twin/asset.hpp"
#include "twin/filter.hpp"
#include "twin/frame.hpp"
#include "twin/planner.hpp"
#include "twin/state_space.hpp"

namespace twin {

/// Transition rule of one control input.
struct TransitionRule {
  enum class Type { Degrade, Improve, Reset };
  Type type = Type::Degrade;
  double rate = 0.0;                  // Degrade
  std::vector<double> improve_probs;  // Improve
};

struct ActionConfig {
  std::string name;
  double control_reward = 0.0;
  ActionKind kind = ActionKind::DoNothing;
  TransitionRule transition;
  double decrement_mean = 0.0;  // ImperfectRepair ground-truth effect
  double decrement_std = 0.0;
};

struct RewardConfig {
  double gamma = 0.95;
  double alpha = 1.0;
  double undamaged_health = 0.0;
  std::vector<HealthRule> health_rules;
  std::optional<CatastrophicClause> catastrophic;
  double tol = 1e-9;
  int max_sweeps = 100000;
};

struct GroundTruthConfig {
  DegradationProcess degradation;
  std::optional<DegradationProcess> restricted;
  double recovery_threshold = 0.3;
  double delta_max = 0.8;
};

struct StructureConfig {
  std::string geometry;  // "lframe" | "portal"
  LFrameConfig lframe;
  PortalConfig portal;
  double damping_ratio = 0.0;
  int n_sensors = 8;
  double duration = 1.0;  // recording window T [s]
  double fs = 200.0;      // sampling / integration rate [Hz]
  double snr = 100.0;
  double pod_tolerance = 1e-3;
  int snapshot_runs = 400;
  std::vector<std::pair<double, double>> operational_ranges;
};

struct DatasetConfig {
  int size = 2000;
  bool stratified = true;
  int test_per_cell = 6;
  int n_bands = 16;
  bool persist_recordings = false;
};

struct ObservationConfig {
  std::string mode = "channel";  // "channel" | "pipeline"
  int n_obs = 1;
};

struct RunConfig {
  std::string name;
  int n_regions = 0;
  std::vector<double> interval_bounds;
  std::vector<ActionConfig> actions;
  RewardConfig reward;
  GroundTruthConfig ground_truth;
  StructureConfig structure;
  DatasetConfig dataset;
  ObservationConfig observation;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
};

RunConfig load_config(const std::string& path);
// Full cross-field validation; throws ConfigError before any compute starts.
void validate_config(const RunConfig& cfg);

// Derived objects. All are pure functions of the validated config.
StateSpace make_state_space(const RunConfig& cfg);
std::vector<TransitionModel> make_transition_models(const RunConfig& cfg, const StateSpace& space);
RewardSpec make_reward_spec(const RunConfig& cfg);
DegradationSpec make_degradation_spec(const RunConfig& cfg);
RepairSpec make_repair_spec(const RunConfig& cfg);
StructureModel make_structure(const RunConfig& cfg);
int recording_steps(const RunConfig& cfg);  // L = floor(T * fs)

}  // namespace twin
