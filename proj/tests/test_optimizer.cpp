#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "mollab/optimizer.hpp"

using namespace mollab;

namespace {

PolySpec identity_poly() { return PolySpec::linear(); }

PolySpec square_poly() { return PolySpec({rational(0), rational(0), rational(1)}); }

// 2x - x^2: same endpoints as x but with curvature, I = 4/3
PolySpec arch_poly() { return PolySpec({rational(0), rational(2), rational(-1)}); }

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("nv_ratio matches hand-computed rationals") {
  PolySpec lin = identity_poly();

  // lambda(x, 1/4) = 1 + 4 = 5 each side, cross term 2:
  // (1+1)^2 / (5 + 5 + 2) = 4/12 = 1/3
  CHECK(nv_ratio(lin, lin, rational(1, 4), rational(1, 4)) == rational(1, 3));

  // equal thetas: 2 theta / (1 + 2 theta) at theta = 0.3 is 0.6/1.6 = 0.375
  CHECK(nv_ratio(lin, lin, 0.3, 0.3) == doctest::Approx(0.375).epsilon(1e-15));

  // x^2 has I = 4/3, so lambda(x^2, 1/4) = 1 + 16/3 = 19/3;
  // 2x - x^2 has the same I, lambda(., 1/3) = 1 + 4 = 5;
  // ratio = 4 / (19/3 + 5 + 2) = 4 / (40/3) = 3/10
  CHECK(nv_ratio(square_poly(), arch_poly(), rational(1, 4), rational(1, 3)) == rational(3, 10));

  // unequal thetas on the identity: 4 / (4 + 10 + 5/2) = 8/33
  CHECK(nv_ratio(lin, lin, rational(1, 10), rational(2, 5)) == rational(8, 33));
}

TEST_CASE("nv_ratio rejects thetas outside (0, 1/2)") {
  PolySpec lin = identity_poly();
  CHECK_THROWS_AS(nv_ratio(lin, lin, rational(0), rational(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(nv_ratio(lin, lin, rational(1, 4), rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(nv_ratio(lin, lin, rational(-1, 10), rational(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(nv_ratio(lin, lin, 0.0, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(nv_ratio(lin, lin, 0.25, 0.5), std::invalid_argument);
}

TEST_CASE("optimize recovers the identity polynomial at every degree") {
  for (int d = 1; d <= 8; ++d) {
    for (double theta : {0.05, 0.25, 0.45}) {
      CAPTURE(d);
      CAPTURE(theta);
      OptimizeResult res = optimize(d, theta, theta);

      // exact: the minimizer of int P'^2 with P(0)=0, P(1)=1 is P(x) = x
      REQUIRE(res.p1.degree() == d);
      CHECK(res.p1.coeffs()[1] == rational(1));
      for (int k = 2; k <= d; ++k) CHECK(res.p1.coeffs()[k] == rational(0));
      CHECK(res.p2.coeffs() == res.p1.coeffs());

      // achieved ratio equals 2 theta / (1 + 2 theta) in exact arithmetic
      // (theta enters as the binary rational the double denotes)
      rational t(theta);
      CHECK(res.ratio == 2 * t / (1 + 2 * t));
      CHECK(res.closed_form == doctest::Approx(to_double(res.ratio)).epsilon(1e-14));

      CHECK(res.ratio < 1);
      CHECK(res.descent_gap <= 1e-9);
      for (const auto& [name, value] : res.slack) {
        CAPTURE(name);
        CHECK(std::abs(value) <= 1e-12);
      }
    }
  }
}

TEST_CASE("optimize at degree 6 stays on the closed form") {
  OptimizeResult res = optimize(6, 0.25, 0.25);
  CHECK(to_double(res.ratio) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  for (int k = 2; k <= 6; ++k)
    CHECK(std::abs(to_double(res.p1.coeffs()[k])) <= 1e-7);
}

TEST_CASE("optimize validates its arguments") {
  CHECK_THROWS_AS(optimize(0, 0.25, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(optimize(9, 0.25, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(optimize(3, 0.5, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(optimize(3, 0.25, 0.0), std::invalid_argument);
}

TEST_CASE("sandwich value and its relation to the optimum") {
  CHECK(sandwich_value(rational(1, 4), rational(1, 4)) == rational(1, 3));
  CHECK(sandwich_value(rational(0), rational(0)) == rational(0));
  CHECK(sandwich_value(0.25, 0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // equal thetas: the sandwich value is attained exactly
  for (double theta : {0.1, 0.25, 0.4}) {
    OptimizeResult res = optimize(4, theta, theta);
    rational t(theta);
    CHECK(res.ratio == sandwich_value(t, t));
  }

  // unequal thetas: strictly below the sandwich value (AM-HM gap);
  // 8/33 against (1/10 + 2/5)/(1 + 1/2) = 1/3
  rational attained = nv_ratio(identity_poly(), identity_poly(), rational(1, 10), rational(2, 5));
  CHECK(attained == rational(8, 33));
  CHECK(attained < sandwich_value(rational(1, 10), rational(2, 5)));
}

TEST_CASE("admissibility cap and the eta correction") {
  CHECK(c_eta(rational(0), rational(0)) == rational(0));
  CHECK(theta_max(rational(0), rational(0)) == rational(1, 2));
  CHECK(theta_max(0.001, 0.001) == doctest::Approx(0.454).epsilon(1e-15));

  // xi = 0.046, c = 1/2 - 0.908/1.908
  CHECK(c_eta(0.001, 0.001) == doctest::Approx(0.5 - 0.908 / 1.908).epsilon(1e-14));

  // monotone in both arguments
  double prev = -1.0;
  for (double e : {0.0, 0.002, 0.004, 0.008}) {
    double v = c_eta(e, e);
    CHECK(v > prev);
    prev = v;
  }

  // blows past the admissible region at xi >= 1/2, boundary included
  CHECK_THROWS_AS(c_eta(rational(1, 82), rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(c_eta(0.02, 0.02), std::invalid_argument);
}

TEST_CASE("c_eta + sandwich at theta_star is exactly one half") {
  // theta* = 1/2 - xi makes the two pieces complementary; this is an exact
  // rational identity, checked with no rounding anywhere
  const std::pair<rational, rational> etas[] = {
      {rational(1, 1000), rational(1, 1000)},  // xi = 23/500
      {rational(1, 123), rational(1, 77)},     // xi = 92/231
  };
  for (const auto& [e1, e2] : etas) {
    rational xi = 41 * e1 + 5 * e2;
    REQUIRE(xi < rational(1, 2));
    rational theta_star = rational(1, 2) - xi;
    CHECK(c_eta(e1, e2) + sandwich_value(theta_star, theta_star) == rational(1, 2));
    // and the equal-theta optimum at theta* agrees with the sandwich there
    CHECK(2 * theta_star / (1 + 2 * theta_star) == (1 - 2 * xi) / (2 - 2 * xi));
  }
}

TEST_CASE("coordinate descent lands on the exact minimum") {
  for (int d : {2, 5, 8}) {
    CAPTURE(d);
    CHECK(descent_min_integral(d) == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(descent_min_integral(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(descent_min_integral(0), std::invalid_argument);
}

}
