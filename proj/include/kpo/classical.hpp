#pragma once

#include <array>
#include <vector>

#include "kpo/params.hpp"

namespace kpo {

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

enum class StationaryKind {
  global_min,
  local_min,
  local_max,
  hyperbolic,
  inflection,        // one flat direction with cubic descent
  monkey_saddle,     // third-order saddle, three descent sectors
  degenerate_circle  // xi = 0, delta > 0: minimum on the circle q^2+p^2 = delta
};

const char* to_string(StationaryKind k);

struct CriticalPoint {
  PhasePoint pos;      // a representative point on the circle for degenerate_circle
  double energy = 0.0;
  StationaryKind kind = StationaryKind::global_min;
  double radius = 0.0;  // nonzero only for degenerate_circle
};

// H_c(q,p) = (q^2+p^2)^2/4 - delta (q^2+p^2)/2 - drive_coeff(mu,xi) Re[(q+ip)^mu]
double classical_energy(const ControlParams& p, double q, double p_);

// (dH/dq, dH/dp) and the symplectic flow (dH/dp, -dH/dq).
std::array<double, 2> classical_gradient(const ControlParams& p, double q, double p_);
PhasePoint hamiltonian_flow(const ControlParams& p, double q, double p_);

// (H_qq, H_qp, H_pp)
std::array<double, 3> classical_hessian(const ControlParams& p, double q, double p_);

// All stationary points from the closed forms, classified, sorted by
// (energy, q, p). Coincident roots on boundary lines are deduplicated.
// Throws physics_error for mu = 4 with |xi| >= 1/2 (unbounded regime).
std::vector<CriticalPoint> find_critical_points(const ControlParams& p);

// Classify one stationary point. Precondition ||grad H|| <= 1e-8 (config_error).
// Minima are labeled global when their energy matches the stationary minimum
// within 1e-10.
StationaryKind classify_stationary(const ControlParams& p, double q, double p_);

// ---------------------------------------------------------------------------
// Phase-diagram regions
// ---------------------------------------------------------------------------

enum class RegionLabel {
  I,
  II,
  III,
  IV,
  VI,
  boundary,  // mu = 1: delta = 3 (xi^2/2)^(1/3)
  line_III,  // mu = 3: delta = -xi^2 (first-order transition line)
  line_V,    // mu = 3: delta = 0 (antispinodal, monkey saddle)
  spinodal,  // mu = 3: delta = -9 xi^2 / 8
  unbounded  // mu = 4: |xi| >= 1/2
};

const char* to_string(RegionLabel r);

struct PhaseRegion {
  RegionLabel region = RegionLabel::I;
  bool tilde = false;  // xi < 0: same diagram rotated by pi/mu
  bool esqpt_peak = false;
  bool esqpt_step = false;
};

PhaseRegion phase_region(const ControlParams& p);

// ---------------------------------------------------------------------------
// Classical rescaling
// ---------------------------------------------------------------------------

// Classical-frame couplings. Energies in these couplings are measured in
// K_c = K n_eff^2, phase-space coordinates carry x = X / sqrt(n_eff).
struct ClassicalParams {
  int mu = 2;
  double delta = 0.0;
  double xi = 0.0;
};

// delta_c = delta / n_eff, xi_c = xi / n_eff^(2 - mu/2).
ClassicalParams to_classical(const ControlParams& p);
ControlParams to_quantum(const ClassicalParams& c, double n_eff, int n_trunc);

}  // namespace kpo
