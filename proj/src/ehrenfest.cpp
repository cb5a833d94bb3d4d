#include "kpo/ehrenfest.hpp"

#include "kpo/common.hpp"
#include "kpo/parallel.hpp"
#include "kpo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace kpo {

const char* to_string(TransitionOrder o) {
  switch (o) {
    case TransitionOrder::first: return "first";
    case TransitionOrder::second: return "second";
    case TransitionOrder::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Step-candidate analysis of one difference series: locate the largest jump,
// grow the transition zone while neighbor increments stay comparable, and
// measure plateau-to-plateau height against the off-zone fluctuation level.
struct StepScan {
  bool valid = false;
  int pair = 0;          // argmax increment sits between pair and pair+1
  int left = 0, right = 0;  // plateau endpoints flanking the zone
  double jump = 0.0;
  double noise = 0.0;  // RMS increment outside the zone
  int n_outside = 0;
  int zone_width = 0;
};

StepScan scan_series(const std::vector<double>& d, int m) {
  StepScan s;
  const int lo = 1, hi = m - 2;  // valid central-difference range
  if (hi - lo < 3) return s;

  int best = -1;
  double peak = 0.0;
  for (int i = lo; i + 1 <= hi; ++i) {
    const double a = std::abs(d[i + 1] - d[i]);
    if (a > peak) {
      peak = a;
      best = i;
    }
  }
  if (best < 0 || peak == 0.0) return s;

  int L = best, R = best + 1;
  while (L - 1 >= lo && std::abs(d[L] - d[L - 1]) > 0.1 * peak) --L;
  while (R + 1 <= hi && std::abs(d[R + 1] - d[R]) > 0.1 * peak) ++R;

  double acc = 0.0;
  int n_out = 0;
  for (int i = lo; i + 1 <= hi; ++i) {
    if (i >= L && i < R) continue;  // increment inside the zone
    const double a = d[i + 1] - d[i];
    acc += a * a;
    ++n_out;
  }
  s.valid = true;
  s.pair = best;
  s.left = L;
  s.right = R;
  s.jump = std::abs(d[R] - d[L]);
  s.noise = n_out > 0 ? std::sqrt(acc / n_out) : 0.0;
  s.n_outside = n_out;
  s.zone_width = R - L;
  return s;
}

}  // namespace

EhrenfestReport ehrenfest_order(const ClassicalParams& classical, SweepAxis axis, double lo,
                                double hi, double h, double n_eff, int n_trunc, int threads) {
  if (!(h > 0.0)) throw config_error("grid step must be positive");
  if (!(hi > lo)) throw config_error("grid needs hi > lo");
  const double ratio = (hi - lo) / h;
  const int m = static_cast<int>(std::floor(ratio + 1e-6)) + 1;
  if (m < 9) throw config_error("transition-order analysis needs at least 9 grid points");

  EhrenfestReport r;
  r.grid.resize(m);
  for (int i = 0; i < m; ++i) r.grid[i] = lo + i * h;

  r.e0_scaled.assign(m, kNaN);
  r.e0_classical.assign(m, kNaN);
  parallel_for(m, threads, [&](std::size_t i) {
    ClassicalParams c = classical;
    (axis == SweepAxis::delta ? c.delta : c.xi) = r.grid[i];
    ControlParams qp = to_quantum(c, n_eff, n_trunc);
    r.e0_scaled[i] = full_spectrum(qp, 0).energies[0] / (n_eff * n_eff);
    try {
      ControlParams cl{c.mu, c.delta, c.xi, qp.n_trunc, 1.0};
      double floor_e = kNaN;
      for (const auto& cp : find_critical_points(cl))
        floor_e = std::isnan(floor_e) ? cp.energy : std::min(floor_e, cp.energy);
      r.e0_classical[i] = floor_e;
    } catch (const physics_error&) {
      r.e0_classical[i] = kNaN;
    }
  });

  r.d1.assign(m, kNaN);
  r.d2.assign(m, kNaN);
  for (int i = 1; i + 1 < m; ++i) {
    r.d1[i] = (r.e0_scaled[i + 1] - r.e0_scaled[i - 1]) / (2.0 * h);
    r.d2[i] = (r.e0_scaled[i + 1] - 2.0 * r.e0_scaled[i] + r.e0_scaled[i - 1]) / (h * h);
  }

  const double zone_cap = std::max(4.0, 0.25 * m);

  StepScan s1 = scan_series(r.d1, m);
  if (s1.valid) {
    r.d1_jump = s1.jump;
    r.d1_noise = s1.noise;
  }
  double span1 = 0.0;
  {
    double dmin = 1e300, dmax = -1e300;
    for (int i = 1; i + 1 < m; ++i) {
      dmin = std::min(dmin, r.d1[i]);
      dmax = std::max(dmax, r.d1[i]);
    }
    span1 = dmax - dmin;
  }
  if (s1.valid && s1.n_outside >= 3 && s1.zone_width <= zone_cap && s1.jump > 5.0 * s1.noise &&
      s1.jump > 0.25 * span1) {
    r.order = TransitionOrder::first;
    r.critical_param = 0.5 * (r.grid[s1.pair] + r.grid[s1.pair + 1]);
    StepScan s2 = scan_series(r.d2, m);
    if (s2.valid) {
      r.d2_jump = s2.jump;
      r.d2_noise = s2.noise;
    }
    return r;
  }

  StepScan s2 = scan_series(r.d2, m);
  if (s2.valid) {
    r.d2_jump = s2.jump;
    r.d2_noise = s2.noise;
  }
  std::vector<double> mag;
  for (int i = 1; i + 1 < m; ++i) mag.push_back(std::abs(r.d2[i]));
  std::sort(mag.begin(), mag.end());
  const double med_abs_d2 = mag.empty() ? 0.0 : mag[mag.size() / 2];

  if (s2.valid && s2.n_outside >= 3 && s2.zone_width <= zone_cap && s2.jump > 5.0 * s2.noise &&
      s2.jump > 0.2 * med_abs_d2) {
    r.order = TransitionOrder::second;
    r.critical_param = 0.5 * (r.grid[s2.pair] + r.grid[s2.pair + 1]);
    return r;
  }

  r.order = TransitionOrder::inconclusive;
  return r;
}

}  // namespace kpo
