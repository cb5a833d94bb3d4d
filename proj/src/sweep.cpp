#include "kpo/sweep.hpp"

#include "kpo/common.hpp"
#include "kpo/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kpo {

ControlParams at_axis(const ControlParams& base, SweepAxis axis, double value) {
  ControlParams p = base;
  (axis == SweepAxis::delta ? p.delta : p.xi) = value;
  return p;
}

ParameterSweep sweep_spectrum(const ControlParams& base, SweepAxis axis,
                              const std::vector<double>& grid, int certify,
                              EnergyReference ref, int threads) {
  validate(base);
  if (grid.empty()) throw config_error("sweep grid must not be empty");
  ParameterSweep sw;
  sw.base = base;
  sw.axis = axis;
  sw.grid = grid;
  sw.reference = ref;
  sw.points.resize(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t k) {
    sw.points[k] = full_spectrum(at_axis(base, axis, grid[k]), certify, false);
  });
  return sw;
}

namespace {

// Ladder of one sector at one sweep point, restricted to certified levels.
std::vector<std::vector<double>> sector_ladders(const EigenSolution& pt, int n_sectors,
                                                int prefix) {
  std::vector<std::vector<double>> lad(n_sectors);
  for (int i = 0; i < prefix; ++i) lad[pt.sectors[i]].push_back(pt.energies[i]);
  return lad;
}

}  // namespace

std::vector<SpacingSeries> mean_level_spacing(const ParameterSweep& sweep, int count,
                                              bool per_sector) {
  if (count < 2) throw config_error("mean spacing needs at least two levels");
  if (sweep.points.empty()) throw config_error("empty sweep");

  const int n_sectors = per_sector ? sweep.base.mu : 1;
  std::vector<SpacingSeries> out(n_sectors);
  for (int s = 0; s < n_sectors; ++s) {
    out[s].sector = per_sector ? s : -1;
    out[s].mean_spacing.resize(sweep.grid.size());
  }

  for (std::size_t k = 0; k < sweep.points.size(); ++k) {
    const EigenSolution& pt = sweep.points[k];
    if (per_sector) {
      auto lad = sector_ladders(pt, sweep.base.mu, pt.dim());
      for (int s = 0; s < n_sectors; ++s) {
        if (static_cast<int>(lad[s].size()) < count)
          throw config_error("sector " + std::to_string(s) + " holds only " +
                             std::to_string(lad[s].size()) + " levels, need " +
                             std::to_string(count));
        out[s].mean_spacing[k] = (lad[s][count - 1] - lad[s][0]) / (count - 1);
      }
    } else {
      if (pt.dim() < count)
        throw config_error("spectrum holds only " + std::to_string(pt.dim()) +
                           " levels, need " + std::to_string(count));
      out[0].mean_spacing[k] = (pt.energies[count - 1] - pt.energies[0]) / (count - 1);
    }
  }
  return out;
}

std::vector<CrossingEvent> detect_crossings(
    const ParameterSweep& sweep, double gap_threshold,
    const std::function<std::pair<double, double>(double)>& window) {
  const std::size_t n_pts = sweep.points.size();
  if (n_pts < 2) return {};
  const int mu = sweep.base.mu;

  bool certified = false;
  for (const auto& pt : sweep.points)
    if (pt.converged_count > 0 || pt.first_unconverged >= 0) certified = true;

  // ladders per point, truncated to the certified prefix when available
  std::vector<std::vector<std::vector<double>>> lad(n_pts);
  std::vector<int> cap(mu, 1 << 30);
  for (std::size_t k = 0; k < n_pts; ++k) {
    const EigenSolution& pt = sweep.points[k];
    lad[k] = sector_ladders(pt, mu, certified ? pt.converged_count : pt.dim());
    for (int s = 0; s < mu; ++s) cap[s] = std::min(cap[s], static_cast<int>(lad[k][s].size()));
  }

  std::vector<CrossingEvent> out;
  auto keep = [&](const CrossingEvent& e) {
    if (!window) return true;
    auto [lo, hi] = window(e.param);
    return e.energy >= lo && e.energy <= hi;
  };

  // real crossings: sign change of a cross-sector difference, both ends
  // resolved above the degeneracy noise floor
  for (std::size_t k = 0; k + 1 < n_pts; ++k) {
    for (int sa = 0; sa < mu; ++sa) {
      for (int sb = sa + 1; sb < mu; ++sb) {
        for (int i = 0; i < cap[sa]; ++i) {
          for (int j = 0; j < cap[sb]; ++j) {
            const double a0 = lad[k][sa][i], b0 = lad[k][sb][j];
            const double a1 = lad[k + 1][sa][i], b1 = lad[k + 1][sb][j];
            const double d0 = a0 - b0, d1 = a1 - b1;
            if (!(d0 * d1 < 0.0)) continue;
            const double tol0 = 1e-9 * std::max({1.0, std::abs(a0), std::abs(b0)});
            const double tol1 = 1e-9 * std::max({1.0, std::abs(a1), std::abs(b1)});
            if (std::abs(d0) <= tol0 || std::abs(d1) <= tol1) continue;
            const double t = d0 / (d0 - d1);  // exact for linear level motion
            CrossingEvent e;
            e.param = sweep.grid[k] + t * (sweep.grid[k + 1] - sweep.grid[k]);
            e.kind = CrossingKind::real_crossing;
            e.sector_a = sa;
            e.sector_b = sb;
            e.index_a = i;
            e.index_b = j;
            e.gap = 0.0;
            e.energy = a0 + t * (a1 - a0);
            if (keep(e)) out.push_back(e);
          }
        }
      }
    }
  }

  // avoided crossings: interior local minima of in-sector neighbor gaps
  for (int s = 0; s < mu; ++s) {
    for (int i = 0; i + 1 < cap[s]; ++i) {
      for (std::size_t k = 1; k + 1 < n_pts; ++k) {
        const double gm = lad[k - 1][s][i + 1] - lad[k - 1][s][i];
        const double g0 = lad[k][s][i + 1] - lad[k][s][i];
        const double gp = lad[k + 1][s][i + 1] - lad[k + 1][s][i];
        if (!(g0 < gm && g0 <= gp && g0 < gap_threshold)) continue;
        CrossingEvent e;
        e.param = sweep.grid[k];
        e.kind = CrossingKind::avoided_crossing;
        e.sector_a = e.sector_b = s;
        e.index_a = i;
        e.index_b = i + 1;
        e.gap = g0;
        e.energy = 0.5 * (lad[k][s][i] + lad[k][s][i + 1]);
        if (keep(e)) out.push_back(e);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const CrossingEvent& a, const CrossingEvent& b) {
    if (a.param != b.param) return a.param < b.param;
    if (a.kind != b.kind) return a.kind == CrossingKind::real_crossing;
    return a.energy < b.energy;
  });
  return out;
}

}  // namespace kpo
