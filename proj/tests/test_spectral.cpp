#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/spectral.hpp"

using namespace cheegerlab;
using Catch::Approx;

namespace {

// Airy Ai by its everywhere-convergent power series, as an independent check
// on the tabulated first zero. Ai = Ai(0) f + Ai'(0) g with f'' = x f-type
// recurrences for the two fundamental solutions.
double airy_ai(double x) {
  const double alpha = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
  const double beta = -1.0 / (std::pow(3.0, 1.0 / 3.0) * std::tgamma(1.0 / 3.0));
  const double x3 = x * x * x;
  double f = 1.0, g = x;
  double tf = 1.0, tg = x;
  for (int k = 0; k < 40; ++k) {
    tf *= x3 / ((3 * k + 2) * (3 * k + 3));
    tg *= x3 / ((3 * k + 3) * (3 * k + 4));
    f += tf;
    g += tg;
  }
  return alpha * f + beta * g;
}

}  // namespace

TEST_CASE("tabulated constants are zeros of their special functions") {
  // j2 is the first zero of the Bessel function J0.
  REQUIRE(std::abs(std::cyl_bessel_j(0.0, constants::j2)) < 1e-13);
  REQUIRE(std::cyl_bessel_j(0.0, constants::j2 - 0.1) > 0.0);
  REQUIRE(std::cyl_bessel_j(0.0, constants::j2 + 0.1) < 0.0);

  // airy_a1 is the first (largest) negative zero of Ai.
  REQUIRE(std::abs(airy_ai(constants::airy_a1)) < 1e-13);
  REQUIRE(airy_ai(constants::airy_a1 + 0.1) > 0.0);
  REQUIRE(airy_ai(constants::airy_a1 - 0.1) < 0.0);
}

TEST_CASE("first Dirichlet eigenvalues of rectangles and disks") {
  REQUIRE(lambda1_rectangle({1.0, 1.0}) == Approx(2.0 * pi * pi).epsilon(1e-14));
  REQUIRE(lambda1_rectangle({2.0, 1.0}) == Approx(pi * pi * 1.25).epsilon(1e-14));
  REQUIRE(lambda1_disk(1.0) == Approx(constants::j2 * constants::j2).epsilon(1e-14));
  REQUIRE(lambda1_disk(2.0) == Approx(0.25 * constants::j2 * constants::j2).epsilon(1e-14));
  REQUIRE_THROWS_AS(lambda1_rectangle({0.0, 1.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(lambda1_disk(-1.0), std::invalid_argument);
}

TEST_CASE("closed forms along the shrinking 2x1 rectangle") {
  // At t = 0 the closed form is the rectangle Cheeger constant.
  const RoundedBody rect(Kernel(ConvexPolygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}})), 0.0);
  REQUIRE(rect2x1_h_closed_form(0.0) == Approx(cheeger(rect).h).epsilon(1e-11));
  // Mid-flow cross-check against the solver on the eroded body.
  for (const double t : {0.1, 0.25, 0.4}) {
    REQUIRE(rect2x1_h_closed_form(t) ==
            Approx(cheeger(parallel_body(rect, -t)).h).epsilon(1e-10));
    REQUIRE(rect2x1_lambda1_closed_form(t) ==
            Approx(lambda1_rectangle({2.0 - 2.0 * t, 1.0 - 2.0 * t})).epsilon(1e-14));
  }
  REQUIRE_THROWS_AS(rect2x1_h_closed_form(0.5), std::domain_error);
  REQUIRE_THROWS_AS(rect2x1_h_closed_form(-0.01), std::domain_error);
}

TEST_CASE("eigenvalue-to-cheeger ratio drops from its square start to the slab limit") {
  REQUIRE(ratio_lambda_h(0.0) == Approx(0.81123).margin(5e-6));
  // Near collapse the rectangle behaves like a slab: h ~ 2/b, sqrt(lambda1)
  // ~ pi/b, so the ratio tends to 2/pi from above.
  REQUIRE(ratio_lambda_h(0.499) == Approx(2.0 / pi).margin(5e-3));
  REQUIRE(ratio_lambda_h(0.499) > 2.0 / pi);
  REQUIRE(ratio_lambda_h(0.0) > ratio_lambda_h(0.25));
  REQUIRE(ratio_lambda_h(0.25) > ratio_lambda_h(0.45));
}

TEST_CASE("spectral gap condition separates thin from fat rectangles") {
  REQUIRE(thin_rect_condition({0.01, 1.0}));
  REQUIRE(thin_rect_condition({0.05, 1.0}));
  REQUIRE_FALSE(thin_rect_condition({1.0, 1.0}));
  REQUIRE_FALSE(thin_rect_condition({2.0, 1.0}));
}

TEST_CASE("bessel zero bound sweep over dimensions") {
  REQUIRE(bessel_bound_check(3));
  REQUIRE(bessel_bound_check(1000));
  REQUIRE_THROWS_AS(bessel_bound_check(2), std::invalid_argument);
  // The planar case, not covered by the sweep: j2 < pi.
  REQUIRE(constants::j2 < pi);
}
