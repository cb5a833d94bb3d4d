#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "kpo/params.hpp"
#include "kpo/spectrum.hpp"

namespace kpo {

struct MCConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // sub-stream id; counter RNG keys on (seed, stream, index)
  int threads = 1;
};

// Histogram density of states. For the quantum variant density = counts per
// unit energy; for the classical variant density estimates
// rho(E) = (1/2pi) d/dE Vol{H_c <= E} by Monte Carlo, with per-bin standard
// errors.
struct DOSHistogram {
  Eigen::VectorXd edges;      // size bins+1
  Eigen::VectorXd counts;     // raw counts per bin
  Eigen::VectorXd density;
  Eigen::VectorXd std_error;  // zeros for the quantum variant
  bool classical = false;
};

DOSHistogram quantum_dos(const Eigen::VectorXd& energies, double e_lo, double e_hi, int bins);

// Uniform sampling over a box that provably contains {H_c <= e_hi}.
// Throws physics_error when the energy surface is unbounded (mu=4, |xi|>=1/2).
DOSHistogram classical_dos(const ControlParams& p, double e_lo, double e_hi, int bins,
                           const MCConfig& mc);

enum class ESQPTKind { peak, step };

struct ESQPTMarker {
  ESQPTKind kind = ESQPTKind::peak;
  double energy = 0.0;
  double strength = 0.0;  // peak: density over neighborhood median; step: drop ratio
};

struct ESQPTOptions {
  double peak_factor = 1.5;   // strict local max above this multiple of the
                              // median of the 4-bin neighborhood
  double step_factor = 1.5;   // adjacent-bin drop ratio, sustained over 2 bins
  int peak_exclusion = 1;     // bins around a peak ignored by the step scan
};

// Needs >= 8 bins (config_error otherwise).
std::vector<ESQPTMarker> detect_esqpt(const DOSHistogram& dos, const ESQPTOptions& opt = {});

}  // namespace kpo
