#pragma once

#include <vector>

#include "kpo/classical.hpp"
#include "kpo/sweep.hpp"

namespace kpo {

enum class TransitionOrder { first, second, inconclusive };

const char* to_string(TransitionOrder o);

// Finite-difference study of the scaled ground energy E0_q / n_eff^2 along
// one classical coupling. d1/d2 are central first/second differences; the
// jump fields measure the discontinuity across the located transition
// (plateau-to-plateau, so the value converges to the classical derivative
// jump as n_eff grows).
struct EhrenfestReport {
  TransitionOrder order = TransitionOrder::inconclusive;
  double critical_param = 0.0;
  double d1_jump = 0.0, d2_jump = 0.0;
  double d1_noise = 0.0, d2_noise = 0.0;  // RMS of differences away from the transition
  std::vector<double> grid;               // classical axis values
  std::vector<double> e0_scaled;          // E0_q / n_eff^2
  std::vector<double> e0_classical;       // stationary minimum of H_c (NaN if unavailable)
  std::vector<double> d1, d2;             // aligned with grid (NaN at edges)
};

// classical.{delta,xi} hold the fixed coupling; the swept one is replaced by
// the grid value. Window [lo, hi] and step h are in classical units; the
// grid is uniform, needs >= 9 points (config_error otherwise).
EhrenfestReport ehrenfest_order(const ClassicalParams& classical, SweepAxis axis, double lo,
                                double hi, double h, double n_eff, int n_trunc,
                                int threads = 1);

}  // namespace kpo
