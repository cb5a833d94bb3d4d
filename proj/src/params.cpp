#include "kpo/params.hpp"

#include "kpo/common.hpp"

#include <cmath>
#include <string>

namespace kpo {

void validate(const ControlParams& p) {
  if (p.mu < 1 || p.mu > 4)
    throw config_error("mu must be 1, 2, 3 or 4 (got " + std::to_string(p.mu) + ")");
  if (p.n_trunc < p.mu + 1)
    throw config_error("n_trunc must be at least mu+1 (got " + std::to_string(p.n_trunc) +
                       " for mu=" + std::to_string(p.mu) + ")");
  if (!(p.n_eff > 0.0))
    throw config_error("n_eff must be positive");
}

double drive_coeff(int mu, double xi) {
  // 2 xi / 2^{mu/2}, written so the dyadic cases stay exact.
  switch (mu) {
    case 1: return std::sqrt(2.0) * xi;
    case 2: return xi;
    case 3: return xi / std::sqrt(2.0);
    case 4: return 0.5 * xi;
    default:
      throw config_error("mu must be 1, 2, 3 or 4 (got " + std::to_string(mu) + ")");
  }
}

}  // namespace kpo
