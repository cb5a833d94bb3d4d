#include "kpo/dos.hpp"

#include "kpo/classical.hpp"
#include "kpo/common.hpp"
#include "kpo/parallel.hpp"
#include "kpo/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace kpo {

namespace {

Eigen::VectorXd uniform_edges(double lo, double hi, int bins) {
  Eigen::VectorXd e(bins + 1);
  for (int i = 0; i <= bins; ++i) e[i] = lo + (hi - lo) * i / bins;
  return e;
}

void check_range(double e_lo, double e_hi, int bins) {
  if (!(e_hi > e_lo)) throw config_error("energy window needs e_hi > e_lo");
  if (bins < 1) throw config_error("histogram needs at least one bin");
}

}  // namespace

DOSHistogram quantum_dos(const Eigen::VectorXd& energies, double e_lo, double e_hi, int bins) {
  check_range(e_lo, e_hi, bins);
  DOSHistogram h;
  h.edges = uniform_edges(e_lo, e_hi, bins);
  h.counts = Eigen::VectorXd::Zero(bins);
  const double w = (e_hi - e_lo) / bins;
  for (int i = 0; i < energies.size(); ++i) {
    const double e = energies[i];
    if (e < e_lo || e >= e_hi) continue;
    const int b = std::min(bins - 1, static_cast<int>((e - e_lo) / w));
    h.counts[b] += 1.0;
  }
  h.density = h.counts / w;
  h.std_error = Eigen::VectorXd::Zero(bins);
  h.classical = false;
  return h;
}

// Radius whose box certainly contains {H_c <= e_hi}: below the returned rho,
// rho^2/4 - |delta| rho / 2 - |c| rho^(mu/2) already exceeds e_hi, and the
// drive term obeys |Re z^mu| <= rho^(mu/2).
static double bounding_rho(const ControlParams& p, double e_hi) {
  const double a = 0.5 * std::abs(p.delta);
  const double b = std::abs(drive_coeff(p.mu, p.xi));
  const double e = std::abs(e_hi);
  double rho;
  if (p.mu == 4) {
    const double lead = 0.25 - b;  // positive, |xi| < 1/2 was checked upstream
    rho = std::max(8.0 * a / lead, std::sqrt(8.0 * e / lead));
  } else {
    rho = std::max({12.0 * a, std::pow(12.0 * b, 1.0 / (2.0 - 0.5 * p.mu)), std::sqrt(12.0 * e)});
  }
  return std::max(rho, 1.0) * 1.000001;
}

DOSHistogram classical_dos(const ControlParams& p, double e_lo, double e_hi, int bins,
                           const MCConfig& mc) {
  validate(p);
  check_range(e_lo, e_hi, bins);
  if (p.mu == 4 && std::abs(p.xi) >= 0.5)
    throw physics_error("four-photon drive with |xi| >= 1/2 has no bound energy surface");
  if (mc.samples < 1) throw config_error("need at least one sample");

  const double R = std::sqrt(bounding_rho(p, e_hi));
  const double side = 2.0 * R;
  const double area = side * side;
  const double w = (e_hi - e_lo) / bins;

  // fixed-size chunks accumulated in index order: the histogram is a pure
  // function of (seed, stream, samples), independent of the thread count
  const std::uint64_t chunk = 65536;
  const std::uint64_t n_chunks = (mc.samples + chunk - 1) / chunk;
  std::vector<std::vector<std::int64_t>> partial(n_chunks);
  parallel_for(n_chunks, mc.threads, [&](std::size_t c) {
    std::vector<std::int64_t> local(bins, 0);
    const std::uint64_t i_lo = c * chunk;
    const std::uint64_t i_hi = std::min(mc.samples, i_lo + chunk);
    for (std::uint64_t i = i_lo; i < i_hi; ++i) {
      const double q = side * (uniform01(mc.seed, mc.stream, i, 0) - 0.5);
      const double pp = side * (uniform01(mc.seed, mc.stream, i, 1) - 0.5);
      const double e = classical_energy(p, q, pp);
      if (e < e_lo || e >= e_hi) continue;
      ++local[std::min(bins - 1, static_cast<int>((e - e_lo) / w))];
    }
    partial[c] = std::move(local);
  });

  DOSHistogram h;
  h.edges = uniform_edges(e_lo, e_hi, bins);
  h.counts = Eigen::VectorXd::Zero(bins);
  for (const auto& local : partial)
    for (int b = 0; b < bins; ++b) h.counts[b] += static_cast<double>(local[b]);

  // density = area * P(bin) / (2 pi w); binomial standard error per bin
  const double n = static_cast<double>(mc.samples);
  const double scale = area / (2.0 * M_PI * w * n);
  h.density = h.counts * scale;
  h.std_error.resize(bins);
  for (int b = 0; b < bins; ++b) {
    const double k = h.counts[b];
    h.std_error[b] = scale * std::sqrt(std::max(0.0, k * (1.0 - k / n)));
  }
  h.classical = true;
  return h;
}

std::vector<ESQPTMarker> detect_esqpt(const DOSHistogram& dos, const ESQPTOptions& opt) {
  const int bins = static_cast<int>(dos.density.size());
  if (bins < 8) throw config_error("ESQPT detection needs at least 8 bins");

  const auto& d = dos.density;
  auto neighborhood_median = [&](int i) {
    std::vector<double> v;
    for (int j = std::max(0, i - 4); j <= std::min(bins - 1, i + 4); ++j)
      if (j != i) v.push_back(d[j]);
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return m % 2 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
  };

  std::vector<ESQPTMarker> out;
  std::vector<int> peak_bins;
  const double d_max = d.maxCoeff();

  for (int i = 1; i + 1 < bins; ++i) {
    if (!(d[i] > d[i - 1] && d[i] > d[i + 1])) continue;
    const double med = neighborhood_median(i);
    if (!(d[i] > opt.peak_factor * med)) continue;
    ESQPTMarker m;
    m.kind = ESQPTKind::peak;
    m.energy = 0.5 * (dos.edges[i] + dos.edges[i + 1]);
    m.strength = d[i] / std::max(med, 1e-12 * std::max(1.0, d_max));
    out.push_back(m);
    peak_bins.push_back(i);
  }

  for (int i = 0; i + 2 < bins; ++i) {
    bool near_peak = false;
    for (int pb : peak_bins)
      if (std::abs(i - pb) <= opt.peak_exclusion) near_peak = true;
    if (near_peak) continue;
    if (!(d[i] > 0.0)) continue;
    const double floor = 1e-12 * std::max(1.0, d_max);
    if (d[i] > opt.step_factor * d[i + 1] && d[i] > opt.step_factor * d[i + 2]) {
      ESQPTMarker m;
      m.kind = ESQPTKind::step;
      m.energy = dos.edges[i + 1];  // right edge of the high plateau bin
      m.strength = d[i] / std::max(d[i + 1], floor);
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace kpo
