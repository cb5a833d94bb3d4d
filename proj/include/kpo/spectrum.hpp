#pragma once

#include <vector>

#include <Eigen/Dense>

#include "kpo/fock.hpp"

namespace kpo {

// Eigenpairs in ascending energy order. For merged spectra, exact ties are
// broken by sector residue ascending, then by in-sector index, so output is
// reproducible bit for bit. states has one column per level, embedded in the
// full number basis; it has zero columns when eigenvectors were not requested.
struct EigenSolution {
  Eigen::VectorXd energies;
  Eigen::MatrixXd states;
  std::vector<int> sectors;       // residue per level
  std::vector<int> sector_index;  // ladder position within its sector
  int converged_count = 0;        // lowest levels certified truncation-converged
  int first_unconverged = -1;     // -1 when everything requested is certified

  int dim() const { return static_cast<int>(energies.size()); }
};

// Symmetric tridiagonal QL on one sector block. Throws numerical_error if
// the solver fails or, when eigenvectors are requested, if any residual
// ||H v - E v|| exceeds 1e-9 max(1, |E|).
EigenSolution diagonalize(const SectorBlock& block, bool want_states = false);

// All sectors solved and merged. The lowest `certify` levels are checked
// against a doubled-truncation run (|dE| <= 1e-8 max(1,|E|) per level);
// converged_count/first_unconverged report the outcome.
EigenSolution full_spectrum(const ControlParams& p, int certify, bool want_states = false);

// Spectrum of the dense matrix, cross-validation route for the block path.
Eigen::VectorXd dense_spectrum(const HamiltonianMatrix& h);

}  // namespace kpo
