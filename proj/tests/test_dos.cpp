#include <doctest.h>

#include <cmath>
#include <vector>

#include "kpo/dos.hpp"
#include "kpo/sweep.hpp"

using namespace kpo;

namespace {

DOSHistogram synthetic(const std::vector<double>& density, double lo, double hi) {
  DOSHistogram h;
  int n = static_cast<int>(density.size());
  h.edges.resize(n + 1);
  for (int i = 0; i <= n; ++i) h.edges[i] = lo + (hi - lo) * i / n;
  h.density = Eigen::Map<const Eigen::VectorXd>(density.data(), n);
  h.counts = h.density;
  h.std_error = Eigen::VectorXd::Zero(n);
  return h;
}

}  // namespace

TEST_CASE("quantum histogram: frozen counts and density") {
  Eigen::VectorXd e(5);
  e << 0.5, 1.5, 2.5, 2.7, 9.0;  // 9.0 falls outside [0,3)
  DOSHistogram h = quantum_dos(e, 0.0, 3.0, 3);
  REQUIRE(h.counts.size() == 3);
  CHECK(h.counts[0] == 1.0);
  CHECK(h.counts[1] == 1.0);
  CHECK(h.counts[2] == 2.0);
  CHECK(h.density[2] == doctest::Approx(2.0).epsilon(1e-13));  // counts per unit energy
  CHECK(!h.classical);
  CHECK(h.std_error.maxCoeff() == 0.0);
  CHECK_THROWS_AS(quantum_dos(e, 3.0, 0.0, 3), config_error);
  CHECK_THROWS_AS(quantum_dos(e, 0.0, 3.0, 0), config_error);
}

TEST_CASE("classical density against the exact undriven curve, delta < 0") {
  // xi = 0, delta = -1: rho(E) = 1 / sqrt(delta^2 + 4 E), single well.
  ControlParams p{2, -1.0, 0.0, 16, 1.0};
  MCConfig mc;
  mc.samples = 400000;
  mc.seed = 7;
  DOSHistogram h = classical_dos(p, 0.05, 2.0, 13, mc);
  CHECK(h.classical);
  for (int i = 0; i < 13; ++i) {
    double mid = 0.5 * (h.edges[i] + h.edges[i + 1]);
    double want = 1.0 / std::sqrt(1.0 + 4.0 * mid);
    double tol = 4.0 * h.std_error[i] + 0.015 * want;
    CHECK(std::abs(h.density[i] - want) <= tol);
  }
}

TEST_CASE("classical density shows the factor-two step, delta > 0") {
  // xi = 0, delta = 2.5: two sheets below E = 0, one above.
  ControlParams p{2, 2.5, 0.0, 16, 1.0};
  MCConfig mc;
  mc.samples = 600000;
  mc.seed = 11;
  DOSHistogram h = classical_dos(p, -1.0, 1.0, 10, mc);
  // bins 0..4 sit below zero, 5..9 above
  for (int i : {2, 3}) {
    double mid = 0.5 * (h.edges[i] + h.edges[i + 1]);
    double want = 2.0 / std::sqrt(2.5 * 2.5 + 4.0 * mid);
    CHECK(std::abs(h.density[i] - want) <= 4.0 * h.std_error[i] + 0.02 * want);
  }
  for (int i : {6, 7}) {
    double mid = 0.5 * (h.edges[i] + h.edges[i + 1]);
    double want = 1.0 / std::sqrt(2.5 * 2.5 + 4.0 * mid);
    CHECK(std::abs(h.density[i] - want) <= 4.0 * h.std_error[i] + 0.02 * want);
  }
}

TEST_CASE("classical histogram is deterministic in (seed, stream)") {
  ControlParams p{3, 1.0, 0.9, 16, 1.0};
  MCConfig mc;
  mc.samples = 50000;
  mc.seed = 3;
  DOSHistogram a = classical_dos(p, -2.0, 1.0, 12, mc);
  DOSHistogram b = classical_dos(p, -2.0, 1.0, 12, mc);
  CHECK((a.counts - b.counts).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.density - b.density).cwiseAbs().maxCoeff() == 0.0);
  mc.seed = 4;
  DOSHistogram c = classical_dos(p, -2.0, 1.0, 12, mc);
  CHECK((a.counts - c.counts).cwiseAbs().maxCoeff() > 0.0);
  mc.seed = 3;
  mc.threads = 4;
  DOSHistogram d = classical_dos(p, -2.0, 1.0, 12, mc);
  CHECK((a.counts - d.counts).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("classical histogram refuses the unbounded quartic drive") {
  ControlParams p{4, 1.0, 0.6, 16, 1.0};
  MCConfig mc;
  CHECK_THROWS_AS(classical_dos(p, -1.0, 1.0, 10, mc), physics_error);
}

TEST_CASE("quantum histogram approaches the classical one when scaled") {
  // mu = 2 region III at delta_c = 3, xi_c = 1, n_eff = 30. Integrated level
  // count below E_c = 0 should match n_eff * Int rho_cl dE to a few percent.
  double n_eff = 30.0;
  ControlParams q{2, 3.0 * n_eff, 1.0 * n_eff, 220, n_eff};
  EigenSolution sol = full_spectrum(q, 0);
  double e_min_c = -std::pow((3.0 + 2.0) / 2.0, 2);  // -6.25
  int below = 0;
  for (int i = 0; i < sol.energies.size(); ++i)
    if (sol.energies[i] / (n_eff * n_eff) <= 0.0) ++below;

  ControlParams c{2, 3.0, 1.0, 16, 1.0};
  MCConfig mc;
  mc.samples = 400000;
  mc.seed = 5;
  DOSHistogram h = classical_dos(c, e_min_c - 0.05, 0.0, 40, mc);
  double integral = 0.0, sigma2 = 0.0;
  for (int i = 0; i < 40; ++i) {
    double w = h.edges[i + 1] - h.edges[i];
    integral += h.density[i] * w;
    sigma2 += std::pow(h.std_error[i] * w, 2);
  }
  double predicted = n_eff * integral;
  CHECK(std::abs(below - predicted) <= 0.04 * predicted + 3.0 * n_eff * std::sqrt(sigma2) + 2.0);
}

TEST_CASE("peak detector: strict local maximum over the neighborhood median") {
  std::vector<double> d = {1.0, 1.0, 1.0, 1.0, 5.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  auto marks = detect_esqpt(synthetic(d, 0.0, 10.0));
  REQUIRE(marks.size() == 1);
  CHECK(marks[0].kind == ESQPTKind::peak);
  CHECK(marks[0].energy == doctest::Approx(4.5).epsilon(1e-12));  // bin center
  CHECK(marks[0].strength == doctest::Approx(5.0).epsilon(1e-12));

  // a gentle bump below the 1.5x factor is not a peak
  std::vector<double> flat = {1.0, 1.0, 1.1, 1.4, 1.1, 1.0, 1.0, 1.0};
  CHECK(detect_esqpt(synthetic(flat, 0.0, 8.0)).empty());
}

TEST_CASE("step detector: sustained drop at a bin edge") {
  std::vector<double> d = {2.0, 2.0, 2.0, 2.0, 0.9, 0.9, 0.9, 0.9};
  auto marks = detect_esqpt(synthetic(d, 0.0, 8.0));
  REQUIRE(marks.size() == 1);
  CHECK(marks[0].kind == ESQPTKind::step);
  CHECK(marks[0].energy == doctest::Approx(4.0).epsilon(1e-12));  // edge between bins 3 and 4
  CHECK(marks[0].strength == doctest::Approx(2.0 / 0.9).epsilon(1e-12));

  // a one-bin dip is not sustained
  std::vector<double> dip = {2.0, 2.0, 2.0, 2.0, 0.9, 2.0, 2.0, 2.0};
  for (const auto& m : detect_esqpt(synthetic(dip, 0.0, 8.0)))
    CHECK(m.kind != ESQPTKind::step);
}

TEST_CASE("the falling side of a peak is not reported as a step") {
  std::vector<double> d = {1.0, 1.0, 1.0, 1.0, 1.0, 8.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  auto marks = detect_esqpt(synthetic(d, 0.0, 11.0));
  REQUIRE(marks.size() == 1);
  CHECK(marks[0].kind == ESQPTKind::peak);
}

TEST_CASE("peak and step together, and the bin-count guard") {
  std::vector<double> d = {2.0, 2.0, 2.0, 6.0, 2.0, 2.0, 0.9, 0.9, 0.9, 0.9};
  auto marks = detect_esqpt(synthetic(d, 0.0, 10.0));
  REQUIRE(marks.size() == 2);
  bool peak = false, step = false;
  for (const auto& m : marks) {
    if (m.kind == ESQPTKind::peak) {
      peak = true;
      CHECK(m.energy == doctest::Approx(3.5).epsilon(1e-12));
    }
    if (m.kind == ESQPTKind::step) {
      step = true;
      CHECK(m.energy == doctest::Approx(6.0).epsilon(1e-12));
    }
  }
  CHECK(peak);
  CHECK(step);
  CHECK_THROWS_AS(detect_esqpt(synthetic({1, 1, 1, 1, 1, 1, 1}, 0.0, 7.0)), config_error);
}

TEST_CASE("spectral peak at the hyperbolic energy, mu = 2") {
  // Region III at (delta, xi) = (7, 2), n_eff = 30: the level density peaks
  // at the saddle energy E_c = -((delta_c - 2 xi_c)/2)^2 = -2.25 and steps at
  // the local-maximum energy 0.
  double n_eff = 30.0;
  ControlParams q{2, 7.0 * n_eff, 2.0 * n_eff, 380, n_eff};
  EigenSolution sol = full_spectrum(q, 0);
  Eigen::VectorXd scaled = sol.energies / (n_eff * n_eff);
  DOSHistogram h = quantum_dos(scaled, -20.5, 1.8, 24);
  auto marks = detect_esqpt(h);
  bool peak_ok = false;
  double bin = (1.8 + 20.5) / 24;
  for (const auto& m : marks)
    if (m.kind == ESQPTKind::peak && std::abs(m.energy - (-2.25)) <= bin) peak_ok = true;
  CHECK(peak_ok);
}
