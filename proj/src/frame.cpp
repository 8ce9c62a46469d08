#include "twin/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twin/errors.hpp"

namespace twin {

namespace {

using Mat6 = Eigen::Matrix<double, 6, 6>;

Mat6 local_stiffness(const FrameElement& e, double len) {
  const double EA = e.E * e.A / len;
  const double EI = e.E * e.I;
  const double l2 = len * len;
  const double l3 = l2 * len;
  Mat6 k = Mat6::Zero();
  k(0, 0) = EA;
  k(0, 3) = -EA;
  k(3, 0) = -EA;
  k(3, 3) = EA;
  k(1, 1) = 12 * EI / l3;
  k(1, 2) = 6 * EI / l2;
  k(1, 4) = -12 * EI / l3;
  k(1, 5) = 6 * EI / l2;
  k(2, 2) = 4 * EI / len;
  k(2, 4) = -6 * EI / l2;
  k(2, 5) = 2 * EI / len;
  k(4, 4) = 12 * EI / l3;
  k(4, 5) = -6 * EI / l2;
  k(5, 5) = 4 * EI / len;
  k.triangularView<Eigen::StrictlyLower>() = k.transpose();
  return k;
}

Mat6 local_mass(const FrameElement& e, double len) {
  const double m = e.rho * e.A * len / 420.0;
  const double l2 = len * len;
  Mat6 mm = Mat6::Zero();
  mm(0, 0) = 140;
  mm(0, 3) = 70;
  mm(3, 3) = 140;
  mm(1, 1) = 156;
  mm(1, 2) = 22 * len;
  mm(1, 4) = 54;
  mm(1, 5) = -13 * len;
  mm(2, 2) = 4 * l2;
  mm(2, 4) = 13 * len;
  mm(2, 5) = -3 * l2;
  mm(4, 4) = 156;
  mm(4, 5) = -22 * len;
  mm(5, 5) = 4 * l2;
  mm.triangularView<Eigen::StrictlyLower>() = mm.transpose();
  return m * mm;
}

Mat6 rotation(double c, double s) {
  Mat6 t = Mat6::Zero();
  t(0, 0) = c;
  t(0, 1) = s;
  t(1, 0) = -s;
  t(1, 1) = c;
  t(2, 2) = 1;
  t(3, 3) = c;
  t(3, 4) = s;
  t(4, 3) = -s;
  t(4, 4) = c;
  t(5, 5) = 1;
  return t;
}

void scatter(Matrix& target, const Mat6& ke, const int dofs[6]) {
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      target(dofs[i], dofs[j]) += ke(i, j);
    }
  }
}

Matrix condense(const Matrix& full, const std::vector<int>& free_of_global, int n_free) {
  Matrix out(n_free, n_free);
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n_free));
  for (std::size_t g = 0; g < free_of_global.size(); ++g) {
    if (free_of_global[g] >= 0) keep.push_back(static_cast<int>(g));
  }
  for (int i = 0; i < n_free; ++i) {
    for (int j = 0; j < n_free; ++j) {
      out(i, j) = full(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace

FEModel assemble_model(const FrameMesh& mesh) {
  const int n_global = 3 * static_cast<int>(mesh.nodes.size());
  Matrix m_full = Matrix::Zero(n_global, n_global);
  Matrix k_full = Matrix::Zero(n_global, n_global);
  std::vector<Matrix> k_region_full(static_cast<std::size_t>(mesh.n_regions),
                                    Matrix::Zero(n_global, n_global));

  for (const auto& e : mesh.elements) {
    const auto& na = mesh.nodes[static_cast<std::size_t>(e.a)];
    const auto& nb = mesh.nodes[static_cast<std::size_t>(e.b)];
    const double dx = nb.x - na.x;
    const double dy = nb.y - na.y;
    const double len = std::hypot(dx, dy);
    if (len <= 0.0) throw ConfigError("frame: zero-length element");
    const double c = dx / len;
    const double s = dy / len;
    const Mat6 t = rotation(c, s);
    const Mat6 ke = t.transpose() * local_stiffness(e, len) * t;
    const Mat6 me = t.transpose() * local_mass(e, len) * t;
    const int dofs[6] = {3 * e.a, 3 * e.a + 1, 3 * e.a + 2, 3 * e.b, 3 * e.b + 1, 3 * e.b + 2};
    scatter(k_full, ke, dofs);
    scatter(m_full, me, dofs);
    if (e.region > 0) {
      if (e.region > mesh.n_regions) throw ConfigError("frame: element region id out of range");
      scatter(k_region_full[static_cast<std::size_t>(e.region - 1)], ke, dofs);
    }
  }
  for (const auto& sp : mesh.springs) {
    const int g = 3 * sp.node + sp.dof;
    if (g < 0 || g >= n_global) throw ConfigError("frame: spring dof out of range");
    k_full(g, g) += sp.k;
  }

  FEModel model;
  model.n_regions = mesh.n_regions;
  model.free_of_global.assign(static_cast<std::size_t>(n_global), -1);
  std::vector<bool> fixed(static_cast<std::size_t>(n_global), false);
  for (int g : mesh.fixed_dofs) {
    if (g < 0 || g >= n_global) throw ConfigError("frame: fixed dof out of range");
    fixed[static_cast<std::size_t>(g)] = true;
  }
  int next = 0;
  for (int g = 0; g < n_global; ++g) {
    if (!fixed[static_cast<std::size_t>(g)]) model.free_of_global[static_cast<std::size_t>(g)] = next++;
  }
  model.n_free = next;
  if (model.n_free == 0) throw ConfigError("frame: no free dofs");

  model.M = condense(m_full, model.free_of_global, model.n_free);
  model.K0 = condense(k_full, model.free_of_global, model.n_free);
  model.K_region.reserve(k_region_full.size());
  for (const auto& kr : k_region_full) {
    model.K_region.push_back(condense(kr, model.free_of_global, model.n_free));
  }
  model.x0 = Vector::Zero(model.n_free);
  model.v0 = Vector::Zero(model.n_free);

  Eigen::LLT<Matrix> llt(model.M);
  if (llt.info() != Eigen::Success) {
    throw NumericError("frame: mass matrix is not positive definite");
  }
  return model;
}

Matrix damaged_stiffness(const FEModel& model, int region, double delta) {
  if (region == 0 || delta == 0.0) return model.K0;
  if (region < 1 || region > model.n_regions) {
    throw ConfigError("damaged_stiffness: region id out of range");
  }
  if (delta < 0.0 || delta >= 1.0) {
    throw ConfigError("damaged_stiffness: delta must lie in [0, 1)");
  }
  return model.K0 - delta * model.K_region[static_cast<std::size_t>(region - 1)];
}

Matrix rayleigh_damping(const FEModel& model, const Matrix& K) {
  return model.rayleigh_a0 * model.M + model.rayleigh_a1 * K;
}

Vector natural_frequencies(const Matrix& K, const Matrix& M, int n) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(K, M, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("natural_frequencies: generalized eigensolve failed");
  }
  const Vector& ev = solver.eigenvalues();  // ascending
  Vector omega(n);
  for (int i = 0; i < n; ++i) {
    omega(i) = std::sqrt(std::max(0.0, ev(i)));
  }
  return omega;
}

std::pair<double, double> fit_rayleigh(double omega1, double omega2, double zeta) {
  if (!(omega1 > 0.0) || !(omega2 > omega1)) {
    throw NumericError("fit_rayleigh: need two distinct positive frequencies");
  }
  const double a0 = zeta * 2.0 * omega1 * omega2 / (omega1 + omega2);
  const double a1 = zeta * 2.0 / (omega1 + omega2);
  return {a0, a1};
}

void set_rayleigh_damping(FEModel& model, double zeta) {
  if (zeta == 0.0) {
    model.rayleigh_a0 = 0.0;
    model.rayleigh_a1 = 0.0;
    return;
  }
  const Vector omega = natural_frequencies(model.K0, model.M, 2);
  const auto [a0, a1] = fit_rayleigh(omega(0), omega(1), zeta);
  model.rayleigh_a0 = a0;
  model.rayleigh_a1 = a1;
}

namespace {

// Chain meshes: nodes laid consecutively along the member path, elements
// tiled into n_regions contiguous groups.
int region_of_element(int index, int n_elements, int n_regions) {
  return index * n_regions / n_elements + 1;
}

}  // namespace

FrameMesh build_lframe(const LFrameConfig& cfg) {
  if (cfg.elements_per_arm < 1 || cfg.n_regions < 1) {
    throw ConfigError("lframe: bad discretization");
  }
  const int n_el = 2 * cfg.elements_per_arm;
  if (cfg.n_regions > n_el) throw ConfigError("lframe: more regions than elements");

  FrameMesh mesh;
  mesh.n_regions = cfg.n_regions;
  const double h = cfg.arm_length / cfg.elements_per_arm;
  // Vertical arm rising from the clamp, then a horizontal arm to the tip.
  for (int i = 0; i <= cfg.elements_per_arm; ++i) {
    mesh.nodes.push_back({0.0, i * h});
  }
  for (int i = 1; i <= cfg.elements_per_arm; ++i) {
    mesh.nodes.push_back({i * h, cfg.arm_length});
  }
  const double A = cfg.width * cfg.height;
  const double I = cfg.width * cfg.height * cfg.height * cfg.height / 12.0;
  for (int i = 0; i < n_el; ++i) {
    FrameElement e;
    e.a = i;
    e.b = i + 1;
    e.E = cfg.E;
    e.A = A;
    e.I = I;
    e.rho = cfg.rho;
    e.region = region_of_element(i, n_el, cfg.n_regions);
    mesh.elements.push_back(e);
  }
  mesh.fixed_dofs = {0, 1, 2};  // clamped base
  return mesh;
}

FrameMesh build_portal(const PortalConfig& cfg) {
  if (cfg.deck_elements < 2 || cfg.wall_elements < 1 || cfg.n_regions < 1) {
    throw ConfigError("portal: bad discretization");
  }
  const int n_el = cfg.deck_elements + 2 * cfg.wall_elements;
  if (cfg.n_regions > n_el) throw ConfigError("portal: more regions than elements");

  FrameMesh mesh;
  mesh.n_regions = cfg.n_regions;
  const double hw = cfg.height / cfg.wall_elements;
  const double hd = cfg.span / cfg.deck_elements;
  // Left wall base -> deck left end -> deck right end -> right wall base.
  for (int i = 0; i <= cfg.wall_elements; ++i) {
    mesh.nodes.push_back({0.0, i * hw});
  }
  for (int i = 1; i <= cfg.deck_elements; ++i) {
    mesh.nodes.push_back({i * hd, cfg.height});
  }
  for (int i = 1; i <= cfg.wall_elements; ++i) {
    mesh.nodes.push_back({cfg.span, cfg.height - i * hw});
  }

  const double A_wall = cfg.width * cfg.wall_thickness;
  const double I_wall = cfg.width * std::pow(cfg.wall_thickness, 3) / 12.0;
  const double A_deck = cfg.width * cfg.deck_thickness;
  const double I_deck = cfg.width * std::pow(cfg.deck_thickness, 3) / 12.0;
  const double rho_deck = cfg.rho + cfg.ballast_mass_per_m / A_deck;

  for (int i = 0; i < n_el; ++i) {
    FrameElement e;
    e.a = i;
    e.b = i + 1;
    e.E = cfg.E;
    const bool deck = i >= cfg.wall_elements && i < cfg.wall_elements + cfg.deck_elements;
    e.A = deck ? A_deck : A_wall;
    e.I = deck ? I_deck : I_wall;
    e.rho = deck ? rho_deck : cfg.rho;
    e.region = region_of_element(i, n_el, cfg.n_regions);
    mesh.elements.push_back(e);
  }

  const int base_left = 0;
  const int base_right = static_cast<int>(mesh.nodes.size()) - 1;
  mesh.fixed_dofs = {3 * base_left, 3 * base_left + 1, 3 * base_left + 2,
                     3 * base_right, 3 * base_right + 1, 3 * base_right + 2};

  // Embankment restraint at the deck ends, horizontal only (qualitative
  // reduction of the distributed boundary springs).
  const int deck_left = cfg.wall_elements;
  const int deck_right = cfg.wall_elements + cfg.deck_elements;
  mesh.springs.push_back({deck_left, 0, cfg.support_spring});
  mesh.springs.push_back({deck_right, 0, cfg.support_spring});
  return mesh;
}

std::vector<int> place_sensors(const FrameMesh& mesh, const FEModel& model, int n_sensors) {
  // Candidate = transverse displacement of each non-fixed node; the
  // transverse direction follows the adjacent element's axis.
  std::vector<int> candidates;
  for (std::size_t n = 0; n < mesh.nodes.size(); ++n) {
    const FrameElement* adj = nullptr;
    for (const auto& e : mesh.elements) {
      if (e.a == static_cast<int>(n) || e.b == static_cast<int>(n)) {
        adj = &e;
        break;
      }
    }
    if (!adj) continue;
    const double dx = std::abs(mesh.nodes[static_cast<std::size_t>(adj->b)].x -
                               mesh.nodes[static_cast<std::size_t>(adj->a)].x);
    const double dy = std::abs(mesh.nodes[static_cast<std::size_t>(adj->b)].y -
                               mesh.nodes[static_cast<std::size_t>(adj->a)].y);
    const int local = dx >= dy ? 1 : 0;  // horizontal member -> uy, vertical -> ux
    const int free = model.free_of_global[static_cast<std::size_t>(3 * n + local)];
    if (free >= 0) candidates.push_back(free);
  }
  if (n_sensors < 1 || n_sensors > static_cast<int>(candidates.size())) {
    throw ConfigError("place_sensors: sensor count exceeds instrumentable nodes");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_sensors));
  const int m = static_cast<int>(candidates.size());
  for (int i = 0; i < n_sensors; ++i) {
    // Even placement, biased away from the supports.
    const int pick = static_cast<int>((static_cast<long long>(i + 1) * m) / (n_sensors + 1));
    out.push_back(candidates[static_cast<std::size_t>(std::min(pick, m - 1))]);
  }
  return out;
}

LoadFunction make_load(const StructureModel& s, const Vector& op) {
  if (op.size() < 2) throw ConfigError("make_load: expected two operational parameters");
  const int n = s.fe.n_free;
  if (s.load_kind == StructureModel::LoadKind::TipSine) {
    const double amplitude = op(0) * 1e3 * s.load_area;  // Q [kPa] -> N
    const double omega = 2.0 * M_PI * op(1);
    const int dof = s.tip_dof;
    if (dof < 0 || dof >= n) throw ConfigError("make_load: invalid tip dof");
    return [n, dof, amplitude, omega](double t) {
      Vector f = Vector::Zero(n);
      f(dof) = -amplitude * std::sin(omega * t);
      return f;
    };
  }
  // Axle train: weight of each axle shared linearly between the two deck
  // nodes bracketing its current position.
  const double speed = op(0) / 3.6;            // km/h -> m/s
  const double weight = op(1) * 1000.0 * 9.81;  // ton -> N
  const auto dofs = s.deck_uy_dofs;
  const auto xs = s.deck_x;
  const auto offsets = s.axle_offsets;
  if (dofs.size() != xs.size() || dofs.size() < 2) {
    throw ConfigError("make_load: invalid deck description");
  }
  const double span = xs.back();
  return [n, dofs, xs, offsets, speed, weight, span](double t) {
    Vector f = Vector::Zero(n);
    for (double d : offsets) {
      const double p = speed * t - d;
      if (p < 0.0 || p > span) continue;
      // Locate the bracketing deck segment.
      std::size_t seg = 0;
      while (seg + 2 < xs.size() && xs[seg + 1] < p) ++seg;
      const double x0 = xs[seg];
      const double x1 = xs[seg + 1];
      const double xi = (p - x0) / (x1 - x0);
      if (dofs[seg] >= 0) f(dofs[seg]) -= weight * (1.0 - xi);
      if (dofs[seg + 1] >= 0) f(dofs[seg + 1]) -= weight * xi;
    }
    return f;
  };
}

StructureModel build_structure_lframe(const LFrameConfig& cfg, int n_sensors, double zeta) {
  StructureModel s;
  s.mesh = build_lframe(cfg);
  s.fe = assemble_model(s.mesh);
  set_rayleigh_damping(s.fe, zeta);
  s.sensor_dofs = place_sensors(s.mesh, s.fe, n_sensors);
  s.load_kind = StructureModel::LoadKind::TipSine;
  const int tip_node = static_cast<int>(s.mesh.nodes.size()) - 1;
  s.tip_dof = s.fe.free_of_global[static_cast<std::size_t>(3 * tip_node + 1)];
  s.load_area = cfg.load_area;
  return s;
}

StructureModel build_structure_portal(const PortalConfig& cfg, int n_sensors, double zeta) {
  StructureModel s;
  s.mesh = build_portal(cfg);
  s.fe = assemble_model(s.mesh);
  set_rayleigh_damping(s.fe, zeta);
  s.sensor_dofs = place_sensors(s.mesh, s.fe, n_sensors);
  s.load_kind = StructureModel::LoadKind::AxleTrain;
  s.axle_offsets = cfg.axle_offsets;
  const int first_deck = cfg.wall_elements;
  for (int i = 0; i <= cfg.deck_elements; ++i) {
    const int node = first_deck + i;
    s.deck_uy_dofs.push_back(s.fe.free_of_global[static_cast<std::size_t>(3 * node + 1)]);
    s.deck_x.push_back(s.mesh.nodes[static_cast<std::size_t>(node)].x);
  }
  return s;
}

}  // namespace twin
