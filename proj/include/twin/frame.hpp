#pragma once

#include <utility>
#include <vector>

#include "twin/types.hpp"

namespace twin {

struct FrameNode {
  double x = 0.0;
  double y = 0.0;
};

/// Two-node Euler-Bernoulli plane-frame element (axial + bending).
struct FrameElement {
  int a = 0;
  int b = 0;
  double E = 0.0;    // Young's modulus [Pa]
  double A = 0.0;    // cross-section area [m^2]
  double I = 0.0;    // second moment of area [m^4]
  double rho = 0.0;  // effective density [kg/m^3]
  int region = 0;    // damage-region id, 0 = not damageable
};

/// Grounded spring on one nodal dof (0 = ux, 1 = uy, 2 = rotation).
struct PointSpring {
  int node = 0;
  int dof = 0;
  double k = 0.0;
};

struct FrameMesh {
  std::vector<FrameNode> nodes;
  std::vector<FrameElement> elements;
  std::vector<int> fixed_dofs;  // global dof ids (3 per node)
  std::vector<PointSpring> springs;
  int n_regions = 0;
};

/// Assembled free-dof system with the per-region split of the stiffness, so
/// K(region, delta) = K0 - delta * K_region[region-1].
struct FEModel {
  Matrix M;
  Matrix K0;
  std::vector<Matrix> K_region;
  std::vector<int> free_of_global;  // global dof -> free index, -1 when fixed
  int n_free = 0;
  int n_regions = 0;
  double rayleigh_a0 = 0.0;
  double rayleigh_a1 = 0.0;
  Vector x0, v0;  // at-rest initial conditions
};

FEModel assemble_model(const FrameMesh& mesh);

// Stiffness with the region's element contributions scaled by (1 - delta);
// region 0 returns the undamaged stiffness.
Matrix damaged_stiffness(const FEModel& model, int region, double delta);

// Rayleigh damping a0*M + a1*K with the model's fitted coefficients.
Matrix rayleigh_damping(const FEModel& model, const Matrix& K);

// First n natural angular frequencies of K phi = w^2 M phi, ascending.
Vector natural_frequencies(const Matrix& K, const Matrix& M, int n);

// Same damping ratio zeta on two modes: returns (a0, a1).
std::pair<double, double> fit_rayleigh(double omega1, double omega2, double zeta);

// Fit (a0, a1) on the first two undamaged modes and store them on the model.
void set_rayleigh_damping(FEModel& model, double zeta);

// -- Desk-scale geometries ---------------------------------------------------

/// Two-arm cantilever frame: a clamped vertical arm and a horizontal arm
/// loaded near its free tip, with damage regions tiling the arc length.
struct LFrameConfig {
  double arm_length = 4.0;
  int elements_per_arm = 20;
  double width = 0.3;
  double height = 0.4;
  double E = 30e9;
  double rho = 2500.0;
  int n_regions = 7;
  double load_area = 0.09;  // loaded patch [m^2]; force = Q * area
};

/// Portal frame: two clamped walls carrying a deck crossed by axle loads.
/// Embankment restraint enters as horizontal springs at the deck ends.
struct PortalConfig {
  double span = 15.7;
  double height = 4.7;
  int deck_elements = 20;
  int wall_elements = 6;
  double deck_thickness = 0.5;
  double wall_thickness = 0.7;
  double width = 5.9;
  double E = 34e9;
  double rho = 2500.0;
  double ballast_mass_per_m = 4644.0;  // added deck line mass [kg/m]
  double support_spring = 2e8;         // [N/m]
  std::vector<double> axle_offsets = {0.0, 2.9, 16.0, 18.9, 26.95, 29.85, 42.95, 45.85};
  int n_regions = 6;
};

FrameMesh build_lframe(const LFrameConfig& cfg);
FrameMesh build_portal(const PortalConfig& cfg);

/// Ready-to-run parametrized structure: mesh, assembled model, sensor dofs
/// and the operational-load description.
struct StructureModel {
  enum class LoadKind { TipSine, AxleTrain };

  FrameMesh mesh;
  FEModel fe;
  std::vector<int> sensor_dofs;  // free-dof indices, one per output channel

  LoadKind load_kind = LoadKind::TipSine;
  // TipSine: force Q[kPa] * area * sin(2 pi f t) on the tip's transverse dof.
  int tip_dof = -1;
  double load_area = 0.0;
  // AxleTrain: axles crossing the deck, linearly shared between deck nodes.
  std::vector<int> deck_uy_dofs;  // free uy dof per deck node
  std::vector<double> deck_x;     // deck node coordinates along the span
  std::vector<double> axle_offsets;
};

// Evenly spaced transverse-displacement sensor dofs along the member chain.
std::vector<int> place_sensors(const FrameMesh& mesh, const FEModel& model, int n_sensors);

// Operational load for one parameter draw. TipSine expects op = (Q[kPa], f[Hz]);
// AxleTrain expects op = (speed[km/h], axle mass[ton]).
LoadFunction make_load(const StructureModel& s, const Vector& op);

StructureModel build_structure_lframe(const LFrameConfig& cfg, int n_sensors, double zeta);
StructureModel build_structure_portal(const PortalConfig& cfg, int n_sensors, double zeta);

}  // namespace twin
