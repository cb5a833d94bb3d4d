#include <doctest.h>

#include <cmath>

#include "kpo/ehrenfest.hpp"

using namespace kpo;

TEST_CASE("first-order transition: derivative jump 2 delta_c across xi = 0") {
  // Ground energy -((delta_c + 2|xi_c|)/2)^2 on both sides, so dE0/dxi jumps
  // by 2 delta_c = 3 at xi_c = 0. Quantum rounding at n_eff = 30 is much
  // narrower than the step h = 0.01.
  ClassicalParams c{2, 1.5, 0.0};
  EhrenfestReport r = ehrenfest_order(c, SweepAxis::xi, -0.08, 0.08, 0.01, 30.0, 200);
  CHECK(r.order == TransitionOrder::first);
  CHECK(std::abs(r.critical_param) <= 0.0101);
  CHECK(r.d1_jump == doctest::Approx(3.0).epsilon(0.12));
  REQUIRE(r.grid.size() == 17);
  REQUIRE(r.e0_scaled.size() == 17);
  REQUIRE(r.d1.size() == 17);
  // classical reference column carries the well formula away from the kink
  CHECK(r.e0_classical[0] ==
        doctest::Approx(-std::pow((1.5 + 2 * 0.08) / 2, 2)).epsilon(1e-9));
  // scaled quantum ground sits close to the classical minimum
  CHECK(std::abs(r.e0_scaled[0] - r.e0_classical[0]) < 0.1);
}

TEST_CASE("second-order transition across the well-birth line") {
  // At xi_c = 0.5 the minima leave the origin at delta_c = -1; E0 goes from 0
  // to -((delta_c+1)/2)^2, so d2 E0 jumps by 1/2 with continuous d1.
  ClassicalParams c{2, 0.0, 0.5};
  EhrenfestReport r = ehrenfest_order(c, SweepAxis::delta, -1.6, -0.4, 0.05, 30.0, 160);
  CHECK(r.order == TransitionOrder::second);
  CHECK(std::abs(r.critical_param - (-1.0)) <= 0.17);
  CHECK(r.d2_jump == doctest::Approx(0.5).epsilon(0.35));
}

TEST_CASE("smooth sweep far from any transition is inconclusive") {
  ClassicalParams c{2, 0.0, 0.3};
  EhrenfestReport r = ehrenfest_order(c, SweepAxis::delta, 2.0, 3.0, 0.05, 30.0, 220);
  CHECK(r.order == TransitionOrder::inconclusive);
}

TEST_CASE("grid validation") {
  ClassicalParams c{2, 1.5, 0.0};
  CHECK_THROWS_AS(ehrenfest_order(c, SweepAxis::xi, -0.02, 0.02, 0.01, 30.0, 120), config_error);
  CHECK_THROWS_AS(ehrenfest_order(c, SweepAxis::xi, 0.08, -0.08, 0.01, 30.0, 120), config_error);
  CHECK_THROWS_AS(ehrenfest_order(c, SweepAxis::xi, -0.08, 0.08, 0.0, 30.0, 120), config_error);
}
