#pragma once

// Rounded bodies: a convex kernel (polygon, segment or point) thickened by a
// disk of radius s. The family is closed under both outward offset and inward
// erosion, which keeps area and perimeter exact at every step of a parallel
// flow; geometry only has to be recomputed when an erosion eats past s into
// the polygonal kernel.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

struct Segment {
  Point2 a;
  Point2 b;
};

class Kernel {
 public:
  enum class Kind { polygon, segment, point };

  Kernel(ConvexPolygon p) : v_(std::move(p)) {}
  Kernel(Segment s) : v_(s) {
    if (!is_finite(s.a) || !is_finite(s.b)) {
      throw std::invalid_argument("segment endpoints must be finite");
    }
    if (!(distance(s.a, s.b) > 0.0)) {
      throw std::invalid_argument("segment endpoints must be distinct");
    }
  }
  explicit Kernel(Point2 p) : v_(p) {
    if (!is_finite(p)) throw std::invalid_argument("point must be finite");
  }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  const ConvexPolygon& polygon() const { return std::get<ConvexPolygon>(v_); }
  const Segment& segment() const { return std::get<Segment>(v_); }
  Point2 point() const { return std::get<Point2>(v_); }

  double area() const {
    return kind() == Kind::polygon ? polygon().area() : 0.0;
  }

  // Boundary measure: a segment is traversed twice by its (degenerate) hull
  // boundary, which is exactly what the offset-body perimeter formula needs.
  double perimeter() const {
    switch (kind()) {
      case Kind::polygon: return polygon().perimeter();
      case Kind::segment: return 2.0 * distance(segment().a, segment().b);
      case Kind::point: return 0.0;
    }
    return 0.0;
  }

  double inradius() const {
    return kind() == Kind::polygon ? chebyshev_center(polygon()).radius : 0.0;
  }

 private:
  std::variant<ConvexPolygon, Segment, Point2> v_;
};

// Kernel plus disk radius. area/perimeter/inradius follow the offset-body
// formulas and are exact in the representation; no polygonal approximation
// of the rounded boundary is ever measured.
class RoundedBody {
 public:
  RoundedBody(Kernel kernel, double radius) : kernel_(std::move(kernel)), radius_(radius) {
    if (!(radius >= 0.0) || !std::isfinite(radius)) {
      throw std::invalid_argument("rounding radius must be finite and nonnegative");
    }
  }

  const Kernel& kernel() const { return kernel_; }
  double radius() const { return radius_; }

  double area() const {
    return kernel_.area() + kernel_.perimeter() * radius_ + pi * radius_ * radius_;
  }
  double perimeter() const { return kernel_.perimeter() + 2.0 * pi * radius_; }
  double inradius() const { return kernel_.inradius() + radius_; }

  bool has_interior() const {
    return kernel_.kind() == Kernel::Kind::polygon || radius_ > 0.0;
  }
  bool is_disk() const {
    return kernel_.kind() == Kernel::Kind::point && radius_ > 0.0;
  }

  // Rough linear size, used to scale tolerances.
  double extent() const {
    switch (kernel_.kind()) {
      case Kernel::Kind::polygon: return kernel_.polygon().diameter() + 2.0 * radius_;
      case Kernel::Kind::segment:
        return distance(kernel_.segment().a, kernel_.segment().b) + 2.0 * radius_;
      case Kernel::Kind::point: return 2.0 * radius_;
    }
    return 2.0 * radius_;
  }

 private:
  Kernel kernel_;
  double radius_;
};

// Inward offset of a polygon by depth t: intersection of the edge half-planes
// pushed in by t. Collapses to a segment or point at depths close to the
// inradius; throws only when the result is empty beyond tolerance.
inline Kernel erode(const ConvexPolygon& p, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::domain_error("erosion depth must be finite and nonnegative");
  }
  if (t == 0.0) return Kernel(p);
  const double diam = p.diameter();
  const auto hp = detail::edge_halfplanes(p);

  std::vector<Point2> poly(p.vertices());
  for (const auto& h : hp) {
    poly = detail::clip_halfplane(poly, h.n, h.c - t);
    if (poly.size() < 3) break;
  }
  detail::tidy_ring(poly, diam);
  // Degeneracy is judged on the clipped ring's own scale: an erosion close to
  // the inradius legitimately leaves a tiny polygon, which must stay exact.
  if (poly.size() >= 3) {
    const double clipped_diam = detail::ring_diameter(poly);
    if (ring_area(poly) > tol::geo * clipped_diam * clipped_diam) {
      return Kernel(ConvexPolygon::trusted(std::move(poly)));
    }
  }

  // The offset planes meet in a (possibly empty) set of zero area. Recover it
  // from pairwise intersections of the active shifted edge lines.
  const double r = chebyshev_center(p).radius;
  if (t > r + tol::geo * diam) {
    throw std::domain_error("erosion depth " + std::to_string(t) +
                            " exceeds the inradius " + std::to_string(r));
  }
  const double tc = std::min(t, r);
  const double feas = 1e-9 * diam;
  std::vector<Point2> candidates;
  for (std::size_t i = 0; i < hp.size(); ++i) {
    for (std::size_t j = i + 1; j < hp.size(); ++j) {
      Point2 q;
      if (!detail::solve2(hp[i].n, hp[i].c - tc, hp[j].n, hp[j].c - tc, q)) continue;
      bool ok = true;
      for (const auto& h : hp) {
        if (dot(h.n, q) > h.c - tc + feas) {
          ok = false;
          break;
        }
      }
      if (ok) candidates.push_back(q);
    }
  }
  if (candidates.empty()) {
    return Kernel(chebyshev_center(p).center);
  }
  double best = 0.0;
  Point2 ea = candidates[0], eb = candidates[0];
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const double d = squared_norm(candidates[j] - candidates[i]);
      if (d > best) {
        best = d;
        ea = candidates[i];
        eb = candidates[j];
      }
    }
  }
  if (std::sqrt(best) <= tol::geo * diam) {
    return Kernel(Point2{0.5 * (ea.x + eb.x), 0.5 * (ea.y + eb.y)});
  }
  return Kernel(Segment{ea, eb});
}

// The body at signed offset t: dilation for t > 0, erosion for t < 0. Stays
// within the rounded-body family; empty at and beyond t = -inradius.
inline RoundedBody parallel_body(const RoundedBody& b, double t) {
  if (!std::isfinite(t)) throw std::domain_error("offset must be finite");
  if (t >= -b.radius()) {
    return RoundedBody(b.kernel(), b.radius() + t);
  }
  if (t <= -b.inradius()) {
    throw std::domain_error("parallel body at offset " + std::to_string(t) +
                            " is empty (inradius " + std::to_string(b.inradius()) + ")");
  }
  // -inradius < t < -radius implies a polygon kernel with positive inradius.
  return RoundedBody(erode(b.kernel().polygon(), -t - b.radius()), 0.0);
}

// Tangential test for a rounded body: disks count, and a body with a genuine
// rounding radius or a degenerate kernel is never tangential otherwise.
inline bool body_is_tangential(const RoundedBody& b, double tolerance = tol::tangential) {
  if (b.is_disk()) return true;
  if (b.radius() > 0.0) return false;
  if (b.kernel().kind() != Kernel::Kind::polygon) return false;
  return is_tangential(b.kernel().polygon(), tolerance);
}

// Largest offset at which the inward parallel flow stops being tangential:
// tau = inf { t : parallel_body(b, t) is not tangential }, a value in
// [-inradius, 0]. Erosions of a tangential polygon are homothets of it, so
// tangentiality holds on an initial interval (-inradius, tau) and fails
// after; the boundary is located by bisection. Returns -inradius when no
// inward body is tangential. Undefined (and an error) for disks, whose whole
// flow is tangential.
inline double tau(const RoundedBody& b) {
  if (b.is_disk()) {
    throw std::domain_error("tau is undefined for disks: every parallel body is tangential");
  }
  const double s = b.radius();
  if (b.kernel().kind() != Kernel::Kind::polygon) {
    return -b.inradius();  // stadium-like: erosions stay rounded, never tangential
  }
  const ConvexPolygon& p = b.kernel().polygon();
  const double rp = chebyshev_center(p).radius;
  if (is_tangential(p)) return s == 0.0 ? 0.0 : -s;

  // Probe just inside the collapse depth; back off while the erosion is
  // already degenerate at floating-point scale.
  const auto tangential_at = [&](double u) {
    const Kernel k = erode(p, u);
    return k.kind() == Kernel::Kind::polygon && is_tangential(k.polygon());
  };
  double eps = 1e-5 * rp;
  double hi = rp - eps;
  while (eps < 0.25 * rp) {
    const Kernel k = erode(p, hi);
    if (k.kind() == Kernel::Kind::polygon) break;
    eps *= 10.0;
    hi = rp - eps;
  }
  if (!(hi > 0.0) || !tangential_at(hi)) {
    return -(s + rp);
  }
  double lo = 0.0;  // not tangential here
  while (hi - lo > tol::tau_rel * rp) {
    const double mid = 0.5 * (lo + hi);
    if (tangential_at(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return -(s + 0.5 * (lo + hi));
}

inline RoundedBody scaled(const RoundedBody& b, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("scale factor must be positive and finite");
  }
  switch (b.kernel().kind()) {
    case Kernel::Kind::polygon:
      return RoundedBody(Kernel(scaled(b.kernel().polygon(), factor)), factor * b.radius());
    case Kernel::Kind::segment: {
      const Segment& s = b.kernel().segment();
      return RoundedBody(Kernel(Segment{factor * s.a, factor * s.b}), factor * b.radius());
    }
    case Kernel::Kind::point:
      return RoundedBody(Kernel(factor * b.kernel().point()), factor * b.radius());
  }
  throw std::logic_error("unreachable kernel kind");
}

// --- boundary decomposition ------------------------------------------------

struct EdgePiece {
  Point2 a;
  Point2 b;
};

struct ArcPiece {
  Point2 center;
  double radius;
  double theta0;  // radians; theta1 > theta0, counterclockwise
  double theta1;
};

using BoundaryPiece = std::variant<EdgePiece, ArcPiece>;

// Closed counterclockwise chain of straight edges and circular arcs tracing
// the boundary. Requires a nonempty interior.
inline std::vector<BoundaryPiece> boundary_pieces(const RoundedBody& b) {
  if (!b.has_interior()) {
    throw std::domain_error("degenerate body has no boundary to trace");
  }
  const double s = b.radius();
  std::vector<BoundaryPiece> out;

  const auto angle_of = [](Point2 n) { return std::atan2(n.y, n.x); };

  switch (b.kernel().kind()) {
    case Kernel::Kind::polygon: {
      const ConvexPolygon& p = b.kernel().polygon();
      const std::size_t n = p.size();
      if (s == 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(EdgePiece{p.vertex(i), p.vertex(i + 1)});
        }
        return out;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const Point2 ni = p.outward_normal(i);
        const Point2 nj = p.outward_normal((i + 1) % n);
        out.push_back(EdgePiece{p.vertex(i) + s * ni, p.vertex(i + 1) + s * ni});
        double t0 = angle_of(ni);
        double t1 = angle_of(nj);
        while (t1 <= t0) t1 += 2.0 * pi;
        out.push_back(ArcPiece{p.vertex(i + 1), s, t0, t1});
      }
      return out;
    }
    case Kernel::Kind::segment: {
      const Segment& seg = b.kernel().segment();
      const Point2 d = (1.0 / distance(seg.a, seg.b)) * (seg.b - seg.a);
      const Point2 nr{d.y, -d.x};  // right of travel a -> b
      const double tr = angle_of(nr);
      out.push_back(EdgePiece{seg.a + s * nr, seg.b + s * nr});
      out.push_back(ArcPiece{seg.b, s, tr, tr + pi});
      out.push_back(EdgePiece{seg.b - s * nr, seg.a - s * nr});
      out.push_back(ArcPiece{seg.a, s, tr + pi, tr + 2.0 * pi});
      return out;
    }
    case Kernel::Kind::point: {
      const Point2 c = b.kernel().point();
      out.push_back(ArcPiece{c, s, 0.0, pi});
      out.push_back(ArcPiece{c, s, pi, 2.0 * pi});
      return out;
    }
  }
  throw std::logic_error("unreachable kernel kind");
}

// Inscribed polyline approximation of the boundary. Arc sampling keeps every
// chord's sagitta at or below arc_tol, so the polyline area underestimates
// the true area by at most perimeter * arc_tol.
inline std::vector<Point2> to_polyline(const RoundedBody& b, double arc_tol) {
  if (!(arc_tol > 0.0) || !std::isfinite(arc_tol)) {
    throw std::invalid_argument("arc tolerance must be positive and finite");
  }
  std::vector<Point2> pts;
  for (const BoundaryPiece& piece : boundary_pieces(b)) {
    if (const EdgePiece* e = std::get_if<EdgePiece>(&piece)) {
      pts.push_back(e->a);
      pts.push_back(e->b);
    } else {
      const ArcPiece& a = std::get<ArcPiece>(piece);
      const double span = a.theta1 - a.theta0;
      const double cos_half = std::max(-1.0, 1.0 - arc_tol / a.radius);
      const double max_step = 2.0 * std::acos(cos_half);
      const int steps = std::max(1, static_cast<int>(std::ceil(span / max_step)));
      for (int k = 0; k <= steps; ++k) {
        const double th = a.theta0 + span * k / steps;
        pts.push_back(a.center + Point2{a.radius * std::cos(th), a.radius * std::sin(th)});
      }
    }
  }
  detail::tidy_ring(pts, b.extent());
  return pts;
}

}  // namespace cheegerlab
