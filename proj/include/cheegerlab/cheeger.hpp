#pragma once

// Cheeger constants and Cheeger sets of rounded bodies.
//
// For a planar convex body the Cheeger constant is h = 1/t*, where t* is the
// unique root in (0, inradius) of  |inner parallel body at depth t| = pi t^2,
// and the Cheeger set is that inner body re-thickened by t*. Everything here
// reduces to that scalar root equation; no boundary discretization enters.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "cheegerlab/body.hpp"
#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

// Residual of the defining root equation at depth t in (0, inradius).
inline double inner_area_gap(const RoundedBody& b, double t) {
  if (!(t > 0.0) || !(t < b.inradius())) {
    throw std::domain_error("depth " + std::to_string(t) +
                            " outside (0, inradius) for the inner-area equation");
  }
  return parallel_body(b, -t).area() - pi * t * t;
}

struct CheegerResult {
  double h = 0.0;       // Cheeger constant, = 1/t_star
  double t_star = 0.0;  // root of the inner-area equation
  RoundedBody cheeger_set;
  double area = 0.0;               // |C|
  double perimeter = 0.0;          // P(C)
  double contact_length = 0.0;     // length of boundary shared between C and the body
  double derivative_at_zero = 0.0; // d/dt h(parallel body) at t = 0
};

// Solve the inner-area equation and assemble the Cheeger set. The gap is
// positive at 0+ (full area) and negative at inradius- (inner body collapses
// while pi t^2 stays positive), and it is strictly decreasing, so plain
// bisection is exact enough and deterministic.
inline CheegerResult cheeger(const RoundedBody& b) {
  if (!b.has_interior()) {
    throw std::domain_error("Cheeger constant requires a body with nonempty interior");
  }
  const double r = b.inradius();
  double lo = 0.0;
  double hi = r;
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gap = parallel_body(b, -mid).area() - pi * mid * mid;
    if (gap > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t_star = 0.5 * (lo + hi);

  CheegerResult res{.h = 1.0 / t_star,
                    .t_star = t_star,
                    .cheeger_set = b,
                    .area = 0.0,
                    .perimeter = 0.0,
                    .contact_length = 0.0,
                    .derivative_at_zero = 0.0};
  if (t_star > b.radius()) {
    // The free boundary rolls inside the polygonal part: C is the inner body
    // at depth t*, re-thickened by t*. Its flat edges lie on the body's
    // boundary, so the contact length is the eroded kernel's perimeter.
    const RoundedBody inner = parallel_body(b, -t_star);
    res.cheeger_set = RoundedBody(inner.kernel(), t_star);
    res.contact_length = inner.kernel().perimeter();
  } else {
    // Rounding radius already at least t*: the body is its own Cheeger set.
    res.cheeger_set = b;
    res.contact_length = b.perimeter();
  }
  res.area = res.cheeger_set.area();
  res.perimeter = res.cheeger_set.perimeter();
  // Free boundary consists of circular arcs of curvature h; the flat contact
  // part contributes nothing, so the derivative is 2 pi / |C| - h^2.
  res.derivative_at_zero = 2.0 * pi / res.area - res.h * res.h;
  return res;
}

// Scale-invariant quantity sqrt(area) * h; constant along homothety.
inline double scaled_invariant(const RoundedBody& b) {
  return std::sqrt(b.area()) * cheeger(b).h;
}

// Closed form h = P/(2|K|) + sqrt(pi/|K|), valid exactly when the body is a
// disk or an unrounded tangential polygon (erosions then shrink homothetically
// and the root equation turns into a quadratic).
inline double tangential_closed_form_h(const RoundedBody& b) {
  if (!body_is_tangential(b)) {
    throw std::domain_error("closed form requires a tangential body");
  }
  const double a = b.area();
  return b.perimeter() / (2.0 * a) + std::sqrt(pi / a);
}

// Symmetric difference quotient of h along the parallel flow at t = 0 with a
// single Richardson step (evaluations at +-step and +-step/2).
inline double derivative_fd(const RoundedBody& b, double step) {
  const double r = b.inradius();
  if (!(step > 0.0) || !(step < 0.125 * r)) {
    throw std::domain_error("finite-difference step must lie in (0, inradius/8)");
  }
  const auto diff = [&](double e) {
    return (cheeger(parallel_body(b, e)).h - cheeger(parallel_body(b, -e)).h) / (2.0 * e);
  };
  const double d1 = diff(step);
  const double d2 = diff(0.5 * step);
  return (4.0 * d2 - d1) / 3.0;
}

// The two expressions for the derivative at zero when the Cheeger set's free
// boundary has rolled inside (t* exceeds the rounding radius): curvature form
// 2 pi / |C| - h^2 and contact form -h * contact / |C|. They agree because
// h = P(C)/|C| for the Cheeger set.
inline std::pair<double, double> polygon_derivative_identity(const RoundedBody& b) {
  const CheegerResult res = cheeger(b);
  if (!(res.t_star > b.radius())) {
    throw std::domain_error("contact-form identity needs t* above the rounding radius");
  }
  const double curvature_form = 2.0 * pi / res.area - res.h * res.h;
  const double contact_form = -res.h * res.contact_length / res.area;
  return {curvature_form, contact_form};
}

}  // namespace cheegerlab
