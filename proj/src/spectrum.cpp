#include "kpo/spectrum.hpp"

#include "kpo/common.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kpo {

namespace {

// Residual of the tridiagonal eigenproblem for one column, no dense matrix.
double tridiag_residual(const SectorBlock& b, const Eigen::VectorXd& v, double e) {
  const int m = b.local_dim;
  double acc = 0.0;
  for (int k = 0; k < m; ++k) {
    double r = (b.diag[k] - e) * v[k];
    if (k > 0) r += b.offdiag[k - 1] * v[k - 1];
    if (k + 1 < m) r += b.offdiag[k] * v[k + 1];
    acc += r * r;
  }
  return std::sqrt(acc);
}

struct LevelRef {
  double energy;
  int residue;
  int k;  // ladder position within the sector
};

// Merge order: energy ascending; exact ties by residue, then ladder index.
bool level_less(const LevelRef& a, const LevelRef& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  if (a.residue != b.residue) return a.residue < b.residue;
  return a.k < b.k;
}

Eigen::VectorXd merged_energies(const ControlParams& p) {
  std::vector<LevelRef> order;
  order.reserve(p.n_trunc);
  for (const SectorBlock& b : sector_decompose(p)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(b.diag, b.offdiag, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw numerical_error("tridiagonal eigensolver failed in sector " +
                            std::to_string(b.residue));
    for (int k = 0; k < b.local_dim; ++k)
      order.push_back({solver.eigenvalues()[k], b.residue, k});
  }
  std::sort(order.begin(), order.end(), level_less);
  Eigen::VectorXd e(order.size());
  for (size_t i = 0; i < order.size(); ++i) e[i] = order[i].energy;
  return e;
}

}  // namespace

EigenSolution diagonalize(const SectorBlock& block, bool want_states) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(
      block.diag, block.offdiag,
      want_states ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numerical_error("tridiagonal eigensolver failed in sector " +
                          std::to_string(block.residue));

  EigenSolution s;
  s.energies = solver.eigenvalues();
  s.sectors.assign(block.local_dim, block.residue);
  s.sector_index.resize(block.local_dim);
  std::iota(s.sector_index.begin(), s.sector_index.end(), 0);

  if (want_states) {
    s.states = Eigen::MatrixXd::Zero(block.n_trunc, block.local_dim);
    for (int j = 0; j < block.local_dim; ++j) {
      Eigen::VectorXd v = solver.eigenvectors().col(j);
      const double res = tridiag_residual(block, v, s.energies[j]);
      if (res > 1e-9 * std::max(1.0, std::abs(s.energies[j])))
        throw numerical_error("eigenpair residual " + std::to_string(res) +
                              " in sector " + std::to_string(block.residue));
      for (int k = 0; k < block.local_dim; ++k) s.states(block.fock_index(k), j) = v[k];
    }
  } else {
    s.states.resize(block.n_trunc, 0);
  }
  return s;
}

EigenSolution full_spectrum(const ControlParams& p, int certify, bool want_states) {
  validate(p);

  std::vector<EigenSolution> parts;
  std::vector<LevelRef> order;
  order.reserve(p.n_trunc);
  auto blocks = sector_decompose(p);
  parts.reserve(blocks.size());
  for (const SectorBlock& b : blocks) {
    EigenSolution s = diagonalize(b, want_states);
    for (int k = 0; k < s.dim(); ++k) order.push_back({s.energies[k], b.residue, k});
    parts.push_back(std::move(s));
  }
  std::sort(order.begin(), order.end(), level_less);

  EigenSolution out;
  out.energies.resize(order.size());
  out.sectors.resize(order.size());
  out.sector_index.resize(order.size());
  out.states = want_states ? Eigen::MatrixXd::Zero(p.n_trunc, static_cast<int>(order.size()))
                           : Eigen::MatrixXd(p.n_trunc, 0);
  for (size_t i = 0; i < order.size(); ++i) {
    const LevelRef& lr = order[i];
    out.energies[i] = lr.energy;
    out.sectors[i] = lr.residue;
    out.sector_index[i] = lr.k;
    if (want_states) out.states.col(i) = parts[lr.residue].states.col(lr.k);
  }

  if (certify > 0) {
    const int n_check = std::min<int>(certify, out.dim());
    ControlParams doubled = p;
    doubled.n_trunc = 2 * p.n_trunc;
    Eigen::VectorXd ref = merged_energies(doubled);
    out.converged_count = 0;
    out.first_unconverged = -1;
    for (int i = 0; i < n_check; ++i) {
      const double tol = 1e-8 * std::max(1.0, std::abs(out.energies[i]));
      if (std::abs(out.energies[i] - ref[i]) <= tol) {
        ++out.converged_count;
      } else {
        out.first_unconverged = i;
        break;
      }
    }
  }
  return out;
}

Eigen::VectorXd dense_spectrum(const HamiltonianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numerical_error("dense eigensolver failed");
  return solver.eigenvalues();
}

}  // namespace kpo
