#pragma once

#include <cstdint>
#include <vector>

#include "kpo/classical.hpp"

namespace kpo {

enum class MaskRegion { inner, outer, window };

// Phase-space membership lattice around a separatrix. Cells:
//   inner = connected component of {E_sep < H_c <= E_max} containing the
//           local maximum (4-neighbor flood fill),
//   outer = {H_c > E_sep} minus inner, clipped to the bounding box,
//   0     = neither (wells below the separatrix energy).
struct RegionMask {
  int nq = 0, np = 0;
  double q_lo = 0, q_hi = 0, p_lo = 0, p_hi = 0;
  double e_sep = 0.0;  // hyperbolic-point energy
  double e_max = 0.0;  // local-maximum energy
  PhasePoint hyperbolic;  // representative hyperbolic point
  PhasePoint local_max;
  std::vector<std::uint8_t> cells;  // 0 / 1 (inner) / 2 (outer), row-major in q

  double dq() const { return (q_hi - q_lo) / nq; }
  double dp() const { return (p_hi - p_lo) / np; }
  double box_area() const { return (q_hi - q_lo) * (p_hi - p_lo); }
  // Cell value at a phase-space point; 0 outside the box.
  std::uint8_t at(double q, double p) const;
  bool member(double q, double p, MaskRegion r) const;
  std::size_t count(MaskRegion r) const;
};

// Requires a phase region with a hyperbolic point and a local maximum
// (mu=1 II, mu=2 III, mu=3 VI, mu=4 II); physics_error otherwise.
// The box encloses every critical point and the energy contour slightly
// above the local maximum, padded by a coherent-state width.
RegionMask build_region_mask(const ControlParams& p, int nq = 512, int np = 512);

}  // namespace kpo
