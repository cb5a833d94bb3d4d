#include "kpo/fock.hpp"

#include "kpo/common.hpp"

#include <cmath>

namespace kpo {

double drive_element(int mu, double xi, int n) {
  // -xi * sqrt((n+1)(n+2)...(n+mu)), accumulated in the log domain so the
  // product cannot overflow for large n.
  double log_prod = 0.0;
  for (int j = 1; j <= mu; ++j) log_prod += std::log(static_cast<double>(n) + j);
  return -xi * std::exp(0.5 * log_prod);
}

HamiltonianMatrix build_hamiltonian(const ControlParams& p) {
  validate(p);
  const int dim = p.n_trunc;
  HamiltonianMatrix h;
  h.dim = dim;
  h.band = p.mu;
  h.entries = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    const double nn = static_cast<double>(n);
    h.entries(n, n) = nn * (nn - 1.0) - p.delta * nn;
  }
  for (int n = 0; n + p.mu < dim; ++n) {
    const double v = drive_element(p.mu, p.xi, n);
    h.entries(n + p.mu, n) = v;
    h.entries(n, n + p.mu) = v;
  }
  return h;
}

std::vector<SectorBlock> sector_decompose(const ControlParams& p) {
  validate(p);
  std::vector<SectorBlock> blocks;
  blocks.reserve(p.mu);
  for (int r = 0; r < p.mu; ++r) {
    SectorBlock b;
    b.residue = r;
    b.mu = p.mu;
    b.n_trunc = p.n_trunc;
    b.local_dim = (p.n_trunc - r + p.mu - 1) / p.mu;  // count of n < n_trunc with n = r mod mu
    b.diag.resize(b.local_dim);
    b.offdiag.resize(b.local_dim > 0 ? b.local_dim - 1 : 0);
    for (int k = 0; k < b.local_dim; ++k) {
      const double n = static_cast<double>(b.fock_index(k));
      b.diag[k] = n * (n - 1.0) - p.delta * n;
      if (k + 1 < b.local_dim) b.offdiag[k] = drive_element(p.mu, p.xi, b.fock_index(k));
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace kpo
