#pragma once

// First Dirichlet eigenvalues for rectangles and disks, and the closed forms
// used to compare the eigenvalue flow with the Cheeger flow on a shrinking
// 2 x 1 rectangle.

#include <cmath>
#include <stdexcept>
#include <string>

#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

namespace constants {
// sqrt of the first Dirichlet eigenvalue of the unit disk, i.e. the first
// positive zero of the Bessel function J0.
inline constexpr double j2 = 2.404825557695773;
// First zero of the Airy function Ai, on the negative axis.
inline constexpr double airy_a1 = -2.338107410459767;
}  // namespace constants

struct RectSpec {
  double a = 0.0;
  double b = 0.0;
};

inline double lambda1_rectangle(RectSpec r) {
  if (!(r.a > 0.0) || !(r.b > 0.0)) {
    throw std::invalid_argument("rectangle sides must be positive");
  }
  return pi * pi * (1.0 / (r.a * r.a) + 1.0 / (r.b * r.b));
}

inline double lambda1_disk(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
  return (constants::j2 / radius) * (constants::j2 / radius);
}

// Test whether sqrt(lambda1) strictly exceeds (j2/2) * perimeter / area for
// an a x b rectangle. Holds for thin rectangles, fails for fat ones.
inline bool thin_rect_condition(RectSpec r) {
  const double lhs = std::sqrt(lambda1_rectangle(r));
  const double rhs = 0.5 * constants::j2 * (2.0 * (r.a + r.b)) / (r.a * r.b);
  return lhs > rhs;
}

// Closed forms along the inner parallel flow of the 2 x 1 rectangle, whose
// body at depth t is the (2-2t) x (1-2t) rectangle; valid for t in [0, 1/2).
//
// For an a x b rectangle the Cheeger constant is
//   h = (4 - pi) / (a + b - sqrt((a+b)^2 - (4-pi) a b)),
// the root of the quadratic the inner-area equation reduces to.
inline double rect2x1_h_closed_form(double t) {
  if (!(t >= 0.0) || !(t < 0.5)) {
    throw std::domain_error("depth " + std::to_string(t) + " outside [0, 1/2)");
  }
  const double a = 2.0 - 2.0 * t;
  const double b = 1.0 - 2.0 * t;
  const double s = a + b;
  return (4.0 - pi) / (s - std::sqrt(s * s - (4.0 - pi) * a * b));
}

inline double rect2x1_lambda1_closed_form(double t) {
  if (!(t >= 0.0) || !(t < 0.5)) {
    throw std::domain_error("depth " + std::to_string(t) + " outside [0, 1/2)");
  }
  return lambda1_rectangle({2.0 - 2.0 * t, 1.0 - 2.0 * t});
}

// h / sqrt(lambda1) along the flow; strictly decreasing on [0, 1/2).
inline double ratio_lambda_h(double t) {
  return rect2x1_h_closed_form(t) / std::sqrt(rect2x1_lambda1_closed_form(t));
}

// Upper bound on j_{n/2-1,1} (first zero of the Bessel function of order
// n/2 - 1) against pi n / 2, for dimensions 3..n_max. The three-term zero
// expansion in the Airy coefficient is an upper bound in this range.
inline bool bessel_bound_check(int n_max) {
  if (n_max < 3) throw std::invalid_argument("dimension sweep needs n_max >= 3");
  for (int n = 3; n <= n_max; ++n) {
    const double nu = 0.5 * n - 1.0;
    const double bound = nu - constants::airy_a1 * std::cbrt(0.5 * nu) +
                         0.15 * constants::airy_a1 * constants::airy_a1 * std::cbrt(2.0 / nu);
    if (!(bound < 0.5 * pi * n)) return false;
  }
  return true;
}

}  // namespace cheegerlab
