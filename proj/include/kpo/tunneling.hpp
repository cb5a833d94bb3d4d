#pragma once

#include <vector>

#include "kpo/dos.hpp"
#include "kpo/dynamics.hpp"
#include "kpo/region_mask.hpp"

namespace kpo {

// Monte Carlo estimate of (1/2) Int_region Q(q,p) dq dp (the 1/2 is the
// Jacobian of alpha = (q+ip)/sqrt(2), so the whole plane integrates to 1).
// Returns {volume, standard error}. Uniform box sampling with membership
// rejection; deterministic for a given (seed, stream) independent of
// threading. Requires samples >= 1e3 and a non-empty region (config_error).
std::pair<double, double> husimi_volume(const QuantumState& psi, const RegionMask& mask,
                                        MaskRegion region, const MCConfig& mc);

// Initial-state center: the hyperbolic point displaced radially outward
// until H_c = E_sep + eps_frac (E_max - E_sep).
PhasePoint place_initial_state(const ControlParams& p, const RegionMask& mask,
                               double eps_frac = 0.02);

struct TunnelingTrace {
  std::vector<double> times;  // units of 1/K
  std::vector<double> volume, volume_se, tunneling;  // T(t) = V(t) - V(t0)
  PhasePoint start;
  double v0 = 0.0;       // V(times[0])
  double t_min = 0.0;    // min of T over the window
  double t_min_time = 0.0;
  double t_final = 0.0;
  bool low_initial_mass = false;  // V(t0) < 0.5: placement warning
};

// Coherent state at the placement point, evolved spectrally; V is sampled
// over `region` with MC sub-stream = time index. T(t0, t0) == 0 exactly.
TunnelingTrace effective_tunneling(const ControlParams& p, const RegionMask& mask,
                                   const std::vector<double>& times, const MCConfig& mc,
                                   MaskRegion region = MaskRegion::outer,
                                   double eps_frac = 0.02);

}  // namespace kpo
