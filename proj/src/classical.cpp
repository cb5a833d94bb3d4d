#include "kpo/classical.hpp"

#include "kpo/common.hpp"

#include <algorithm>
#include <cmath>

namespace kpo {

namespace {

// Re[(q+ip)^mu] and its derivatives as explicit real polynomials, kept
// separate from any complex-arithmetic route used for cross-validation.
double f_poly(int mu, double q, double p) {
  switch (mu) {
    case 1: return q;
    case 2: return q * q - p * p;
    case 3: return q * (q * q - 3.0 * p * p);
    default: {
      const double q2 = q * q, p2 = p * p;
      return q2 * q2 - 6.0 * q2 * p2 + p2 * p2;
    }
  }
}

void f_grad(int mu, double q, double p, double& fq, double& fp) {
  switch (mu) {
    case 1: fq = 1.0; fp = 0.0; return;
    case 2: fq = 2.0 * q; fp = -2.0 * p; return;
    case 3: fq = 3.0 * (q * q - p * p); fp = -6.0 * q * p; return;
    default:
      fq = 4.0 * q * (q * q - 3.0 * p * p);
      fp = 4.0 * p * (p * p - 3.0 * q * q);
      return;
  }
}

void f_hess(int mu, double q, double p, double& fqq, double& fqp, double& fpp) {
  switch (mu) {
    case 1: fqq = fqp = fpp = 0.0; return;
    case 2: fqq = 2.0; fqp = 0.0; fpp = -2.0; return;
    case 3: fqq = 6.0 * q; fqp = -6.0 * p; fpp = -6.0 * q; return;
    default:
      fqq = 12.0 * (q * q - p * p);
      fqp = -24.0 * q * p;
      fpp = 12.0 * (p * p - q * q);
      return;
  }
}

// Third and fourth directional data for degenerate classification.
struct CubicForm {
  double qqq, qqp, qpp, ppp;
};
struct QuarticForm {
  double q4, q3p, q2p2, qp3, p4;
};

CubicForm third_derivatives(int mu, double c, double q, double p) {
  CubicForm t{6.0 * q, 2.0 * p, 2.0 * q, 6.0 * p};
  if (mu == 3) {
    t.qqq -= c * 6.0;
    t.qpp -= c * -6.0;
  } else if (mu == 4) {
    t.qqq -= c * 24.0 * q;
    t.qqp -= c * -24.0 * p;
    t.qpp -= c * -24.0 * q;
    t.ppp -= c * 24.0 * p;
  }
  return t;
}

QuarticForm fourth_derivatives(int mu, double c) {
  QuarticForm a{6.0, 0.0, 2.0, 0.0, 6.0};
  if (mu == 4) {
    a.q4 -= c * 24.0;
    a.q2p2 -= c * -24.0;
    a.p4 -= c * 24.0;
  }
  return a;
}

double cubic_along(const CubicForm& t, double vq, double vp) {
  return t.qqq * vq * vq * vq + 3.0 * t.qqp * vq * vq * vp + 3.0 * t.qpp * vq * vp * vp +
         t.ppp * vp * vp * vp;
}

double quartic_along(const QuarticForm& a, double vq, double vp) {
  const double vq2 = vq * vq, vp2 = vp * vp;
  return a.q4 * vq2 * vq2 + 4.0 * a.q3p * vq2 * vq * vp + 6.0 * a.q2p2 * vq2 * vp2 +
         4.0 * a.qp3 * vq * vp2 * vp + a.p4 * vp2 * vp2;
}

// Local classification: every kind except the global/local minimum split,
// which needs knowledge of the full stationary set.
StationaryKind classify_local(const ControlParams& par, double q, double p) {
  const double c = drive_coeff(par.mu, par.xi);
  const double rho = q * q + p * p;

  // Undriven circle of minima: the Hessian is singular along the circle.
  if (par.xi == 0.0 && par.delta > 0.0 &&
      std::abs(rho - par.delta) <= 1e-8 * std::max(1.0, par.delta))
    return StationaryKind::degenerate_circle;

  auto h = classical_hessian(par, q, p);
  const double a = h[0], b = h[1], d = h[2];
  const double mid = 0.5 * (a + d);
  const double disc = std::sqrt(std::max(0.0, 0.25 * (a - d) * (a - d) + b * b));
  const double lam1 = mid - disc, lam2 = mid + disc;
  const double lam_small = std::abs(lam1) <= std::abs(lam2) ? lam1 : lam2;
  const double lam_big = std::abs(lam1) <= std::abs(lam2) ? lam2 : lam1;

  const double hess_scale = std::max({1.0, std::abs(par.delta), std::abs(c), rho});

  if (std::abs(lam_big) <= 1e-8 * std::max(1.0, std::abs(lam_small))) {
    // fully flat to second order: decide by the cubic, then the quartic form
    CubicForm t = third_derivatives(par.mu, c, q, p);
    const double cubic_scale =
        std::max({std::abs(t.qqq), std::abs(t.qqp), std::abs(t.qpp), std::abs(t.ppp)});
    if (cubic_scale > 1e-8 * hess_scale) return StationaryKind::monkey_saddle;

    QuarticForm f4 = fourth_derivatives(par.mu, c);
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < 1440; ++k) {
      const double th = M_PI * k / 1440.0;
      const double v = quartic_along(f4, std::cos(th), std::sin(th));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double tol = 1e-9 * std::max({1.0, std::abs(f4.q4), std::abs(f4.q2p2), std::abs(f4.p4)});
    if (lo > tol) return StationaryKind::local_min;
    if (hi < -tol) return StationaryKind::local_max;
    if (lo < -tol && hi > tol) return StationaryKind::hyperbolic;
    throw numerical_error("stationary point degenerate beyond quartic order");
  }

  if (std::abs(lam_small) <= 1e-8 * std::max(1.0, std::abs(lam_big))) {
    // one flat direction: eigenvector of the (near) zero eigenvalue
    double vq = b, vp = lam_small - a;
    const double alt_q = lam_small - d, alt_p = b;
    if (alt_q * alt_q + alt_p * alt_p > vq * vq + vp * vp) {
      vq = alt_q;
      vp = alt_p;
    }
    double nrm = std::hypot(vq, vp);
    if (nrm == 0.0) {
      vq = 1.0;
      vp = 0.0;
      nrm = 1.0;
    }
    vq /= nrm;
    vp /= nrm;

    CubicForm t = third_derivatives(par.mu, c, q, p);
    const double c3 = cubic_along(t, vq, vp);
    if (std::abs(c3) > 1e-8 * hess_scale) return StationaryKind::inflection;

    const double d4 = quartic_along(fourth_derivatives(par.mu, c), vq, vp);
    const double tol4 = 1e-9 * hess_scale;
    if (d4 > tol4) return lam_big > 0.0 ? StationaryKind::local_min : StationaryKind::hyperbolic;
    if (d4 < -tol4) return lam_big < 0.0 ? StationaryKind::local_max : StationaryKind::hyperbolic;
    throw numerical_error("stationary point degenerate beyond quartic order");
  }

  if (lam1 > 0.0) return StationaryKind::local_min;
  if (lam2 < 0.0) return StationaryKind::local_max;
  return StationaryKind::hyperbolic;
}

struct Candidate {
  PhasePoint pos;
  double radius = 0.0;  // set only for the degenerate circle
  bool circle = false;
};

// One Newton step on the stationarity condition of the mu = 3 radial
// equation Q^2 - 3 c Q - delta = 0 tightens the closed form to an ulp.
double polish_quadratic(double root, double c, double delta) {
  const double g = root * root - 3.0 * c * root - delta;
  const double dg = 2.0 * root - 3.0 * c;
  if (dg != 0.0) root -= g / dg;
  return root;
}

// Newton on q^3 - delta q - s2x with a closed-form seed (mu = 1 drive).
double polish_cubic(double root, double delta, double s2x) {
  for (int it = 0; it < 6; ++it) {
    const double g = root * root * root - delta * root - s2x;
    const double dg = 3.0 * root * root - delta;
    if (dg == 0.0) break;
    const double step = g / dg;
    root -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(root))) break;
  }
  return root;
}

void push_orbit(std::vector<Candidate>& out, int mu, double radial) {
  for (int k = 0; k < mu; ++k) {
    const double th = 2.0 * M_PI * k / mu;
    out.push_back({{radial * std::cos(th), radial * std::sin(th)}, 0.0, false});
  }
}

}  // namespace

const char* to_string(StationaryKind k) {
  switch (k) {
    case StationaryKind::global_min: return "global_min";
    case StationaryKind::local_min: return "local_min";
    case StationaryKind::local_max: return "local_max";
    case StationaryKind::hyperbolic: return "hyperbolic";
    case StationaryKind::inflection: return "inflection";
    case StationaryKind::monkey_saddle: return "monkey_saddle";
    case StationaryKind::degenerate_circle: return "degenerate_circle";
  }
  return "unknown";
}

double classical_energy(const ControlParams& p, double q, double p_) {
  const double rho = q * q + p_ * p_;
  return 0.25 * rho * rho - 0.5 * p.delta * rho - drive_coeff(p.mu, p.xi) * f_poly(p.mu, q, p_);
}

std::array<double, 2> classical_gradient(const ControlParams& p, double q, double p_) {
  const double rho = q * q + p_ * p_;
  const double c = drive_coeff(p.mu, p.xi);
  double fq, fp;
  f_grad(p.mu, q, p_, fq, fp);
  return {q * (rho - p.delta) - c * fq, p_ * (rho - p.delta) - c * fp};
}

PhasePoint hamiltonian_flow(const ControlParams& p, double q, double p_) {
  auto g = classical_gradient(p, q, p_);
  return {g[1], -g[0]};
}

std::array<double, 3> classical_hessian(const ControlParams& p, double q, double p_) {
  const double c = drive_coeff(p.mu, p.xi);
  double fqq, fqp, fpp;
  f_hess(p.mu, q, p_, fqq, fqp, fpp);
  const double hqq = 3.0 * q * q + p_ * p_ - p.delta - c * fqq;
  const double hqp = 2.0 * q * p_ - c * fqp;
  const double hpp = q * q + 3.0 * p_ * p_ - p.delta - c * fpp;
  return {hqq, hqp, hpp};
}

std::vector<CriticalPoint> find_critical_points(const ControlParams& par) {
  validate(par);
  if (par.mu == 4 && std::abs(par.xi) >= 0.5)
    throw physics_error("four-photon drive with |xi| >= 1/2 has no bound energy surface");

  const double c = drive_coeff(par.mu, par.xi);
  std::vector<Candidate> cands;
  cands.push_back({{0.0, 0.0}, 0.0, false});

  if (par.xi == 0.0) {
    if (par.delta > 0.0) {
      const double r = std::sqrt(par.delta);
      cands.push_back({{r, 0.0}, r, true});
    }
  } else if (par.mu == 1) {
    // stationary points solve q^3 - delta q - sqrt(2) xi = 0 on the p = 0 axis
    const double s2x = c;  // sqrt(2) xi
    const double dsc = 0.5 * par.xi * par.xi - par.delta * par.delta * par.delta / 27.0;
    const double dsc_scale =
        std::max({0.5 * par.xi * par.xi, std::abs(par.delta * par.delta * par.delta) / 27.0});
    cands.clear();  // the origin is never stationary when the linear drive is on
    if (std::abs(dsc) <= 1e-12 * dsc_scale) {
      // boundary line: a double root (inflection) plus a simple one
      const double qd = -3.0 * s2x / (2.0 * par.delta);
      cands.push_back({{qd, 0.0}, 0.0, false});
      cands.push_back({{polish_cubic(-2.0 * qd, par.delta, s2x), 0.0}, 0.0, false});
    } else if (dsc > 0.0) {
      const double rt = std::sqrt(dsc);
      const double seed = std::cbrt(0.5 * s2x + rt) + std::cbrt(0.5 * s2x - rt);
      cands.push_back({{polish_cubic(seed, par.delta, s2x), 0.0}, 0.0, false});
    } else {
      // three distinct real roots, delta > 0 guaranteed here
      const double m = 2.0 * std::sqrt(par.delta / 3.0);
      const double arg = std::clamp(3.0 * s2x / (par.delta * m), -1.0, 1.0);
      const double th = std::acos(arg);
      for (int k = 0; k < 3; ++k) {
        const double seed = m * std::cos((th - 2.0 * M_PI * k) / 3.0);
        cands.push_back({{polish_cubic(seed, par.delta, s2x), 0.0}, 0.0, false});
      }
    }
  } else if (par.mu == 2) {
    if (par.delta + 2.0 * par.xi > 0.0) {
      const double r = std::sqrt(par.delta + 2.0 * par.xi);
      cands.push_back({{r, 0.0}, 0.0, false});
      cands.push_back({{-r, 0.0}, 0.0, false});
    }
    if (par.delta - 2.0 * par.xi > 0.0) {
      const double r = std::sqrt(par.delta - 2.0 * par.xi);
      cands.push_back({{0.0, r}, 0.0, false});
      cands.push_back({{0.0, -r}, 0.0, false});
    }
  } else if (par.mu == 3) {
    // radial stationarity on the q axis: Q^2 - 3 c Q - delta = 0,
    // each root carries a Z_3 orbit. The discriminant is snapped to zero
    // inside a rounding band so the spinodal double root never splits.
    const double disc = 9.0 * c * c + 4.0 * par.delta;
    const double disc_scale = std::max(9.0 * c * c, 4.0 * std::abs(par.delta));
    if (std::abs(disc) <= 1e-13 * disc_scale) {
      push_orbit(cands, 3, 1.5 * c);  // double root, no Newton (flat derivative)
    } else if (disc > 0.0) {
      const double rt = std::sqrt(disc);
      const double big = 0.5 * (3.0 * c + std::copysign(rt, c));  // no cancellation
      double roots[2] = {big, -par.delta / big};
      const double scale = std::max(1.0, std::abs(big));
      if (std::abs(roots[0] - roots[1]) <= 1e-7 * scale) {
        push_orbit(cands, 3, polish_quadratic(roots[0], c, par.delta));
      } else {
        for (double r : roots)
          if (std::abs(r) > 1e-12 * scale) push_orbit(cands, 3, polish_quadratic(r, c, par.delta));
      }
    }
  } else {
    // mu = 4: rings on the axes and on the diagonals
    if (par.delta > 0.0) {
      const double qa = std::sqrt(par.delta / (1.0 - 2.0 * par.xi));
      const double u = std::sqrt(par.delta / (2.0 * (1.0 + 2.0 * par.xi)));
      cands.push_back({{qa, 0.0}, 0.0, false});
      cands.push_back({{0.0, qa}, 0.0, false});
      cands.push_back({{-qa, 0.0}, 0.0, false});
      cands.push_back({{0.0, -qa}, 0.0, false});
      const double sq[4] = {1.0, -1.0, -1.0, 1.0};
      const double sp[4] = {1.0, 1.0, -1.0, -1.0};
      for (int k = 0; k < 4; ++k) cands.push_back({{u * sq[k], u * sp[k]}, 0.0, false});
    }
  }

  // deduplicate coincident candidates (boundary-line root collisions)
  double span = 1.0;
  for (const auto& cd : cands) span = std::max(span, std::hypot(cd.pos.q, cd.pos.p));
  std::vector<Candidate> unique;
  for (const auto& cd : cands) {
    bool dup = false;
    for (const auto& u : unique)
      if (std::hypot(cd.pos.q - u.pos.q, cd.pos.p - u.pos.p) <= 1e-9 * span) dup = true;
    if (!dup) unique.push_back(cd);
  }

  std::vector<CriticalPoint> out;
  out.reserve(unique.size());
  for (const auto& cd : unique) {
    CriticalPoint cp;
    cp.pos = cd.pos;
    cp.energy = classical_energy(par, cd.pos.q, cd.pos.p);
    cp.radius = cd.circle ? cd.radius : 0.0;
    cp.kind = cd.circle ? StationaryKind::degenerate_circle : classify_local(par, cd.pos.q, cd.pos.p);
    out.push_back(cp);
  }

  // promote the lowest minima to global
  double floor_e = 1e300;
  for (const auto& cp : out)
    if (cp.kind == StationaryKind::local_min || cp.kind == StationaryKind::degenerate_circle)
      floor_e = std::min(floor_e, cp.energy);
  if (floor_e < 1e300)
    for (auto& cp : out)
      if (cp.kind == StationaryKind::local_min &&
          cp.energy <= floor_e + 1e-10 * std::max(1.0, std::abs(floor_e)))
        cp.kind = StationaryKind::global_min;

  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.pos.q != b.pos.q) return a.pos.q < b.pos.q;
    return a.pos.p < b.pos.p;
  });
  return out;
}

StationaryKind classify_stationary(const ControlParams& par, double q, double p_) {
  validate(par);
  auto g = classical_gradient(par, q, p_);
  const double rho = q * q + p_ * p_;
  const double scale = std::max(1.0, rho * std::sqrt(rho));
  if (std::hypot(g[0], g[1]) > 1e-8 * scale)
    throw config_error("classify_stationary called away from a stationary point");

  StationaryKind kind = classify_local(par, q, p_);
  if (kind != StationaryKind::local_min) return kind;

  const double e_here = classical_energy(par, q, p_);
  double floor_e = e_here;
  for (const auto& cp : find_critical_points(par)) floor_e = std::min(floor_e, cp.energy);
  if (e_here <= floor_e + 1e-10 * std::max(1.0, std::abs(floor_e)))
    return StationaryKind::global_min;
  return StationaryKind::local_min;
}

const char* to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::I: return "I";
    case RegionLabel::II: return "II";
    case RegionLabel::III: return "III";
    case RegionLabel::IV: return "IV";
    case RegionLabel::VI: return "VI";
    case RegionLabel::boundary: return "boundary";
    case RegionLabel::line_III: return "line_III";
    case RegionLabel::line_V: return "line_V";
    case RegionLabel::spinodal: return "spinodal";
    case RegionLabel::unbounded: return "unbounded";
  }
  return "unknown";
}

PhaseRegion phase_region(const ControlParams& par) {
  validate(par);
  PhaseRegion out;
  out.tilde = par.xi < 0.0;
  const double ax = std::abs(par.xi);
  const double d = par.delta;

  auto near_line = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  auto set = [&out](RegionLabel r, bool peak, bool step) {
    out.region = r;
    out.esqpt_peak = peak;
    out.esqpt_step = step;
  };

  switch (par.mu) {
    case 1: {
      const double b = 3.0 * std::cbrt(0.5 * ax * ax);
      if (near_line(d, b)) set(RegionLabel::boundary, true, false);
      else if (d < b) set(RegionLabel::I, false, false);
      else set(RegionLabel::II, true, true);
      break;
    }
    case 2: {
      if (d <= -2.0 * ax) set(RegionLabel::I, false, false);
      else if (d <= 2.0 * ax) set(RegionLabel::II, true, false);
      else set(RegionLabel::III, true, true);
      break;
    }
    case 3: {
      const double spin = -9.0 * ax * ax / 8.0;
      const double coex = -ax * ax;
      if (near_line(d, spin)) set(RegionLabel::spinodal, true, false);
      else if (d < spin) set(RegionLabel::I, false, false);
      else if (near_line(d, coex)) set(RegionLabel::line_III, true, false);
      else if (d < coex) set(RegionLabel::II, true, true);
      else if (near_line(d, 0.0)) set(RegionLabel::line_V, true, false);
      else if (d < 0.0) set(RegionLabel::IV, true, true);
      else set(RegionLabel::VI, true, true);
      break;
    }
    default: {
      if (ax >= 0.5) set(RegionLabel::unbounded, false, false);
      else if (d <= 0.0) set(RegionLabel::I, false, false);
      else set(RegionLabel::II, true, true);
      break;
    }
  }
  return out;
}

ClassicalParams to_classical(const ControlParams& p) {
  validate(p);
  const double scale = std::pow(p.n_eff, 2.0 - 0.5 * p.mu);
  return {p.mu, p.delta / p.n_eff, p.xi / scale};
}

ControlParams to_quantum(const ClassicalParams& c, double n_eff, int n_trunc) {
  const double scale = std::pow(n_eff, 2.0 - 0.5 * c.mu);
  ControlParams p{c.mu, c.delta * n_eff, c.xi * scale, n_trunc, n_eff};
  validate(p);
  return p;
}

}  // namespace kpo
