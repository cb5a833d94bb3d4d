#pragma once

#include <complex>

#include <Eigen/Dense>

#include "kpo/spectrum.hpp"

namespace kpo {

// Normalized state in the truncated number basis.
struct QuantumState {
  Eigen::VectorXcd amp;

  int dim() const { return static_cast<int>(amp.size()); }
};

// Probability mass of |alpha> beyond the basis |0..n_trunc-1>, i.e. the
// upper Poisson tail of |alpha|^2.
double coherent_tail(double alpha_abs2, int n_trunc);

// Amplitudes c_n = e^{-|a|^2/2} a^n / sqrt(n!) by stable recurrence
// (log-domain seeded for very large |alpha|^2, so nothing overflows).
Eigen::VectorXcd coherent_amplitudes(std::complex<double> alpha, int n_trunc);

// Coherent state with the phase-space convention alpha = (q + ip)/sqrt(2).
// Enforces tail < 1e-10 (config_error: truncation too small for |alpha|).
QuantumState coherent_state(std::complex<double> alpha, int n_trunc);
QuantumState coherent_state_qp(double q, double p, int n_trunc);

// Spectral propagation psi(t) = V e^{-i E t} V^T psi. Requires a full
// decomposition (states spanning the space); preserves the norm to 1e-10,
// else numerical_error.
QuantumState evolve(const QuantumState& psi, const EigenSolution& full, double t);

// Husimi function Q(q,p) = |<alpha|psi>|^2 / pi at alpha = (q+ip)/sqrt(2).
// Exact for any alpha, since psi lives inside the truncated basis.
double husimi(const QuantumState& psi, double q, double p);

// Z_mu symmetry action S = exp(-i 2 pi n / mu); commutes with H.
QuantumState apply_symmetry(const QuantumState& psi, int mu);

}  // namespace kpo
