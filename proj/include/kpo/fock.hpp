#pragma once

#include <vector>

#include <Eigen/Dense>

#include "kpo/params.hpp"

namespace kpo {

// Dense symmetric matrix of H in the number basis |0..n_trunc-1>.
// The drive couples |n> to |n+band> only; all other off-diagonal entries
// vanish identically. Intended for cross-validation at desk scale; the
// production path goes through the sector blocks below.
struct HamiltonianMatrix {
  int dim = 0;
  int band = 0;  // = mu
  Eigen::MatrixXd entries;
};

HamiltonianMatrix build_hamiltonian(const ControlParams& p);

// <n+mu| -xi a+^mu |n> = -xi sqrt((n+1)(n+2)...(n+mu)), log-domain product
// so the element stays finite for truncations up to ~1e6.
double drive_element(int mu, double xi, int n);

// One invariant block of the Z_mu symmetry S = exp(-i 2 pi n / mu).
// Fock indices n = residue + k*mu, k = 0..local_dim-1, re-indexed by k give
// a symmetric tridiagonal matrix: diag[k] = n(n-1) - delta n,
// offdiag[k] = -xi sqrt((n_k+1)...(n_k+mu)).
struct SectorBlock {
  int residue = 0;
  int mu = 1;
  int local_dim = 0;
  int n_trunc = 0;  // dimension of the parent space, for embedding back
  Eigen::VectorXd diag;
  Eigen::VectorXd offdiag;  // size local_dim-1

  int fock_index(int k) const { return residue + k * mu; }
};

// Exact decomposition: blocks partition 0..n_trunc-1 by residue mod mu.
std::vector<SectorBlock> sector_decompose(const ControlParams& p);

}  // namespace kpo
