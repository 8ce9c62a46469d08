#include "twin/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "twin/errors.hpp"

namespace twin {

namespace {

using nlohmann::json;

ActionKind parse_kind(const std::string& s) {
  if (s == "degrade") return ActionKind::DoNothing;
  if (s == "restrict") return ActionKind::Restrict;
  if (s == "imperfect_repair") return ActionKind::ImperfectRepair;
  if (s == "perfect_repair") return ActionKind::PerfectRepair;
  throw ConfigError("unknown action kind '" + s + "'");
}

TransitionRule parse_transition(const json& j) {
  TransitionRule rule;
  const std::string type = j.at("type").get<std::string>();
  if (type == "degrade") {
    rule.type = TransitionRule::Type::Degrade;
    rule.rate = j.at("rate").get<double>();
  } else if (type == "improve") {
    rule.type = TransitionRule::Type::Improve;
    rule.improve_probs = j.at("probs").get<std::vector<double>>();
  } else if (type == "reset") {
    rule.type = TransitionRule::Type::Reset;
  } else {
    throw ConfigError("unknown transition type '" + type + "'");
  }
  return rule;
}

DegradationProcess parse_process(const json& j) {
  DegradationProcess p;
  p.inception_prob = j.at("inception_prob").get<double>();
  const auto range = j.at("inception_delta").get<std::vector<double>>();
  if (range.size() != 2) throw ConfigError("inception_delta must be [lo, hi]");
  p.inception_lo = range[0];
  p.inception_hi = range[1];
  p.growth_mean = j.at("growth_mean").get<double>();
  p.growth_std = j.at("growth_std").get<double>();
  return p;
}

std::vector<std::pair<double, double>> parse_ranges(const json& j) {
  std::vector<std::pair<double, double>> out;
  for (const auto& r : j) {
    const auto v = r.get<std::vector<double>>();
    if (v.size() != 2) throw ConfigError("operational range must be [lo, hi]");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

template <typename T>
void maybe(const json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }

  try {
    RunConfig cfg;
    cfg.name = j.at("name").get<std::string>();
    const auto& ss = j.at("state_space");
    cfg.n_regions = ss.at("n_regions").get<int>();
    cfg.interval_bounds = ss.at("interval_bounds").get<std::vector<double>>();

    for (const auto& ja : j.at("actions")) {
      ActionConfig a;
      a.name = ja.at("name").get<std::string>();
      a.control_reward = ja.at("control_reward").get<double>();
      a.kind = parse_kind(ja.at("kind").get<std::string>());
      a.transition = parse_transition(ja.at("transition"));
      if (a.kind == ActionKind::ImperfectRepair) {
        const auto& jr = ja.at("repair");
        a.decrement_mean = jr.at("decrement_mean").get<double>();
        a.decrement_std = jr.at("decrement_std").get<double>();
      }
      cfg.actions.push_back(std::move(a));
    }

    const auto& jr = j.at("reward");
    cfg.reward.gamma = jr.at("gamma").get<double>();
    cfg.reward.alpha = jr.at("alpha").get<double>();
    cfg.reward.undamaged_health = jr.at("undamaged_health").get<double>();
    for (const auto& rule : jr.at("health_rules")) {
      HealthRule h;
      h.regions = rule.at("regions").get<std::vector<int>>();
      h.scale = rule.at("scale").get<double>();
      h.rate = rule.at("rate").get<double>();
      maybe(rule, "offset", h.offset);
      cfg.reward.health_rules.push_back(std::move(h));
    }
    if (jr.contains("catastrophic") && !jr.at("catastrophic").is_null()) {
      CatastrophicClause c;
      c.threshold = jr.at("catastrophic").at("threshold").get<double>();
      c.penalty = jr.at("catastrophic").at("penalty").get<double>();
      cfg.reward.catastrophic = c;
    }
    maybe(jr, "tol", cfg.reward.tol);
    maybe(jr, "max_sweeps", cfg.reward.max_sweeps);

    const auto& jg = j.at("ground_truth");
    cfg.ground_truth.degradation = parse_process(jg.at("degradation"));
    if (jg.contains("restricted")) {
      cfg.ground_truth.restricted = parse_process(jg.at("restricted"));
    }
    maybe(jg, "recovery_threshold", cfg.ground_truth.recovery_threshold);
    maybe(jg, "delta_max", cfg.ground_truth.delta_max);

    const auto& js = j.at("structure");
    cfg.structure.geometry = js.at("geometry").get<std::string>();
    if (cfg.structure.geometry == "lframe") {
      const auto& jl = js.at("lframe");
      auto& l = cfg.structure.lframe;
      maybe(jl, "arm_length", l.arm_length);
      maybe(jl, "elements_per_arm", l.elements_per_arm);
      maybe(jl, "width", l.width);
      maybe(jl, "height", l.height);
      maybe(jl, "E", l.E);
      maybe(jl, "rho", l.rho);
      maybe(jl, "load_area", l.load_area);
      l.n_regions = cfg.n_regions;
    } else if (cfg.structure.geometry == "portal") {
      const auto& jp = js.at("portal");
      auto& p = cfg.structure.portal;
      maybe(jp, "span", p.span);
      maybe(jp, "height", p.height);
      maybe(jp, "deck_elements", p.deck_elements);
      maybe(jp, "wall_elements", p.wall_elements);
      maybe(jp, "deck_thickness", p.deck_thickness);
      maybe(jp, "wall_thickness", p.wall_thickness);
      maybe(jp, "width", p.width);
      maybe(jp, "E", p.E);
      maybe(jp, "rho", p.rho);
      maybe(jp, "ballast_mass_per_m", p.ballast_mass_per_m);
      maybe(jp, "support_spring", p.support_spring);
      maybe(jp, "axle_offsets", p.axle_offsets);
      p.n_regions = cfg.n_regions;
    } else {
      throw ConfigError("unknown geometry '" + cfg.structure.geometry + "'");
    }
    maybe(js, "damping_ratio", cfg.structure.damping_ratio);
    cfg.structure.n_sensors = js.at("n_sensors").get<int>();
    cfg.structure.duration = js.at("T").get<double>();
    cfg.structure.fs = js.at("fs").get<double>();
    cfg.structure.snr = js.at("snr").get<double>();
    maybe(js, "pod_tolerance", cfg.structure.pod_tolerance);
    maybe(js, "snapshot_runs", cfg.structure.snapshot_runs);
    cfg.structure.operational_ranges = parse_ranges(js.at("operational_ranges"));

    const auto& jd = j.at("dataset");
    cfg.dataset.size = jd.at("size").get<int>();
    maybe(jd, "stratified", cfg.dataset.stratified);
    maybe(jd, "test_per_cell", cfg.dataset.test_per_cell);
    maybe(jd, "n_bands", cfg.dataset.n_bands);
    maybe(jd, "persist_recordings", cfg.dataset.persist_recordings);

    const auto& jo = j.at("observation");
    cfg.observation.mode = jo.at("mode").get<std::string>();
    cfg.observation.n_obs = jo.at("n_obs").get<int>();

    if (!j.contains("seed")) {
      throw ConfigError("config requires an explicit seed (reproducibility is mandatory)");
    }
    cfg.seed = j.at("seed").get<std::uint64_t>();
    maybe(j, "out_dir", cfg.out_dir);
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void validate_config(const RunConfig& cfg) {
  // State space invariants are enforced by the constructor.
  const StateSpace space(cfg.n_regions, cfg.interval_bounds);

  if (cfg.actions.empty()) throw ConfigError("config: empty action set");
  std::set<std::string> names;
  for (const auto& a : cfg.actions) {
    if (!names.insert(a.name).second) throw ConfigError("config: duplicate action '" + a.name + "'");
    if (!std::isfinite(a.control_reward)) throw ConfigError("config: non-finite control reward");
    if (a.kind == ActionKind::ImperfectRepair && a.decrement_std < 0.0) {
      throw ConfigError("config: repair decrement std must be >= 0");
    }
    if (a.kind == ActionKind::Restrict && !cfg.ground_truth.restricted) {
      throw ConfigError("config: action '" + a.name +
                        "' restricts operations but no restricted degradation process is given");
    }
  }

  if (!(cfg.reward.gamma >= 0.0 && cfg.reward.gamma < 1.0)) {
    throw ConfigError("config: gamma must lie in [0, 1)");
  }
  if (!std::isfinite(cfg.reward.alpha)) throw ConfigError("config: alpha must be finite");
  for (int region = 1; region <= cfg.n_regions; ++region) {
    bool found = false;
    for (const auto& rule : cfg.reward.health_rules) {
      for (int r : rule.regions) found = found || r == region;
    }
    if (!found) {
      throw ConfigError("config: no health rule covers region " + std::to_string(region));
    }
  }

  const auto check_process = [&](const DegradationProcess& p, const char* what) {
    if (p.inception_prob < 0.0 || p.inception_prob > 1.0) {
      throw ConfigError(std::string("config: ") + what + " inception probability outside [0, 1]");
    }
    if (!(p.inception_hi >= p.inception_lo)) {
      throw ConfigError(std::string("config: ") + what + " inception range inverted");
    }
    if (p.inception_lo < space.delta_min() || p.inception_hi > cfg.ground_truth.delta_max) {
      throw ConfigError(std::string("config: ") + what +
                        " inception range outside the discretized damage range");
    }
    if (p.growth_std < 0.0) {
      throw ConfigError(std::string("config: ") + what + " growth std must be >= 0");
    }
  };
  check_process(cfg.ground_truth.degradation, "degradation");
  if (cfg.ground_truth.restricted) check_process(*cfg.ground_truth.restricted, "restricted");
  if (cfg.ground_truth.recovery_threshold != space.delta_min()) {
    throw ConfigError("config: recovery threshold must equal the smallest interval bound");
  }

  if (cfg.structure.n_sensors < 1) throw ConfigError("config: need at least one sensor");
  if (!(cfg.structure.fs > 0.0) || !(cfg.structure.duration > 0.0)) {
    throw ConfigError("config: T and fs must be positive");
  }
  if (!(cfg.structure.snr > 0.0)) throw ConfigError("config: snr must be positive");
  if (!(cfg.structure.pod_tolerance > 0.0 && cfg.structure.pod_tolerance < 1.0)) {
    throw ConfigError("config: pod_tolerance must lie in (0, 1)");
  }
  if (cfg.structure.snapshot_runs < 1) throw ConfigError("config: need snapshot_runs >= 1");
  if (cfg.structure.operational_ranges.size() != 2) {
    throw ConfigError("config: expected two operational parameter ranges");
  }
  for (const auto& [lo, hi] : cfg.structure.operational_ranges) {
    if (!(hi >= lo)) throw ConfigError("config: operational range inverted");
  }

  if (cfg.dataset.size < 1) throw ConfigError("config: dataset size must be >= 1");
  if (cfg.dataset.test_per_cell < 1) throw ConfigError("config: test_per_cell must be >= 1");
  if (cfg.dataset.n_bands < 1) throw ConfigError("config: n_bands must be >= 1");
  if (recording_steps(cfg) < 2 * cfg.dataset.n_bands) {
    throw ConfigError("config: recording too short for the requested feature bands");
  }

  if (cfg.observation.mode != "channel" && cfg.observation.mode != "pipeline") {
    throw ConfigError("config: observation mode must be 'channel' or 'pipeline'");
  }
  if (cfg.observation.n_obs < 1) throw ConfigError("config: n_obs must be >= 1");

  // Transition rules must be realizable on this state space.
  make_transition_models(cfg, space);
}

StateSpace make_state_space(const RunConfig& cfg) {
  return StateSpace(cfg.n_regions, cfg.interval_bounds);
}

std::vector<TransitionModel> make_transition_models(const RunConfig& cfg,
                                                    const StateSpace& space) {
  std::vector<TransitionModel> models;
  for (std::size_t u = 0; u < cfg.actions.size(); ++u) {
    const auto& rule = cfg.actions[u].transition;
    switch (rule.type) {
      case TransitionRule::Type::Degrade:
        models.push_back(make_degradation_transition(space, static_cast<int>(u), rule.rate));
        break;
      case TransitionRule::Type::Improve:
        models.push_back(
            make_improvement_transition(space, static_cast<int>(u), rule.improve_probs));
        break;
      case TransitionRule::Type::Reset:
        models.push_back(make_reset_transition(space, static_cast<int>(u)));
        break;
    }
  }
  return models;
}

RewardSpec make_reward_spec(const RunConfig& cfg) {
  RewardSpec spec;
  for (const auto& a : cfg.actions) spec.control_rewards.push_back(a.control_reward);
  spec.undamaged_health = cfg.reward.undamaged_health;
  spec.health_rules = cfg.reward.health_rules;
  spec.catastrophic = cfg.reward.catastrophic;
  spec.alpha = cfg.reward.alpha;
  return spec;
}

DegradationSpec make_degradation_spec(const RunConfig& cfg) {
  DegradationSpec spec;
  spec.normal = cfg.ground_truth.degradation;
  spec.restricted = cfg.ground_truth.restricted.value_or(cfg.ground_truth.degradation);
  spec.delta_max = cfg.ground_truth.delta_max;
  spec.n_regions = cfg.n_regions;
  return spec;
}

RepairSpec make_repair_spec(const RunConfig& cfg) {
  RepairSpec spec;
  spec.recovery_threshold = cfg.ground_truth.recovery_threshold;
  for (const auto& a : cfg.actions) {
    ActionEffect e;
    e.kind = a.kind;
    e.decrement_mean = a.decrement_mean;
    e.decrement_std = a.decrement_std;
    spec.per_action.push_back(e);
  }
  return spec;
}

StructureModel make_structure(const RunConfig& cfg) {
  if (cfg.structure.geometry == "lframe") {
    return build_structure_lframe(cfg.structure.lframe, cfg.structure.n_sensors,
                                  cfg.structure.damping_ratio);
  }
  return build_structure_portal(cfg.structure.portal, cfg.structure.n_sensors,
                                cfg.structure.damping_ratio);
}

int recording_steps(const RunConfig& cfg) {
  return static_cast<int>(std::floor(cfg.structure.duration * cfg.structure.fs));
}

}  // namespace twin
