#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "kpo/spectrum.hpp"

namespace kpo {

enum class SweepAxis { delta, xi };
enum class EnergyReference { absolute, relative_to_ground };

// One-parameter family of spectra. Energies are stored absolute; the
// reference tag says how datasets should present them.
struct ParameterSweep {
  ControlParams base;
  SweepAxis axis = SweepAxis::delta;
  std::vector<double> grid;
  std::vector<EigenSolution> points;  // states never kept, all levels merged
  EnergyReference reference = EnergyReference::relative_to_ground;
};

ControlParams at_axis(const ControlParams& base, SweepAxis axis, double value);

ParameterSweep sweep_spectrum(const ControlParams& base, SweepAxis axis,
                              const std::vector<double>& grid, int certify,
                              EnergyReference ref = EnergyReference::relative_to_ground,
                              int threads = 1);

// Mean of consecutive gaps among the lowest `count` levels, one series per
// sector (sector = -1 means the merged spectrum, used for mu = 1).
// Throws config_error when fewer than `count` levels are available.
struct SpacingSeries {
  int sector = -1;
  std::vector<double> mean_spacing;  // one entry per grid point
};

std::vector<SpacingSeries> mean_level_spacing(const ParameterSweep& sweep, int count = 150,
                                              bool per_sector = true);

enum class CrossingKind { real_crossing, avoided_crossing };

struct CrossingEvent {
  double param = 0.0;  // interpolated (real) or grid location of the gap minimum (avoided)
  CrossingKind kind = CrossingKind::real_crossing;
  int sector_a = 0, sector_b = 0;  // equal for avoided crossings
  int index_a = 0, index_b = 0;    // in-sector ladder indices
  double gap = 0.0;                // minimal gap; 0 for real crossings
  double energy = 0.0;             // energy at the event
};

// Real crossings: sign change of E_i^(s) - E_j^(s') between consecutive grid
// points, s != s', both differences resolved above noise. Avoided crossings:
// in-sector local minima of the gap between consecutive ladder levels below
// gap_threshold. `window(param)` optionally restricts events to an absolute
// energy band, e.g. between the classical critical energies.
std::vector<CrossingEvent> detect_crossings(
    const ParameterSweep& sweep, double gap_threshold,
    const std::function<std::pair<double, double>(double)>& window = {});

}  // namespace kpo
