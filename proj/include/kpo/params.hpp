#pragma once

#include "kpo/common.hpp"

namespace kpo {

// Parameters of the mu-photon driven Kerr oscillator. Energies are measured
// in units of the Kerr coefficient K, time in units of 1/K:
//
//   H/K = -delta n + a+^2 a^2 - xi (a+^mu + a^mu),   mu in {1,2,3,4}
//
// n_eff sets the scale of the classical limit: after rescaling the
// commutator becomes [q, p] = i/n_eff.
struct ControlParams {
  int mu = 2;
  double delta = 0.0;
  double xi = 0.0;
  int n_trunc = 400;
  double n_eff = 1.0;
};

// Throws config_error on out-of-contract parameters
// (mu outside 1..4, n_trunc < mu+1, n_eff <= 0).
void validate(const ControlParams& p);

// Coefficient of the classical drive term:
//   H_c = (q^2+p^2)^2/4 - delta (q^2+p^2)/2 - drive_coeff(mu, xi) * Re[(q+ip)^mu]
// i.e. 2 xi / 2^(mu/2), evaluated exactly per mu.
double drive_coeff(int mu, double xi);

}  // namespace kpo
