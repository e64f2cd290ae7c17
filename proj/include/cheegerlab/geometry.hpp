#pragma once

// Planar convex polygons with exact edge-line arithmetic: validation,
// measurement, inscribed circles, form bodies and incircle-tangency tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cheegerlab {

inline constexpr double pi = std::numbers::pi;

// Tolerances are relative; callers scale them by the body's diameter
// (or diameter squared for areas).
namespace tol {
inline constexpr double geo = 1e-9;         // convexity / duplicate-vertex margin
inline constexpr double tangential = 1e-8;  // incircle-fit residual
inline constexpr double tau_rel = 1e-9;     // tangential-breakpoint bisection
}  // namespace tol

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double squared_norm(Point2 p) { return dot(p, p); }
inline double norm(Point2 p) { return std::sqrt(dot(p, p)); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Shoelace area of a closed chain; positive for counterclockwise order.
// Shoelace anchored at the first vertex: keeps the sum accurate for small
// rings far from the origin (deep erosions), where the plain form cancels.
inline double ring_area(const std::vector<Point2>& v) {
  if (v.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 1, n = v.size(); i + 1 < n; ++i) {
    twice += cross(v[i] - v[0], v[i + 1] - v[0]);
  }
  return 0.5 * twice;
}

inline double ring_length(const std::vector<Point2>& v) {
  double len = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    len += distance(v[i], v[(i + 1) % n]);
  }
  return len;
}

namespace detail {

inline double ring_diameter(const std::vector<Point2>& v) {
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      best = std::max(best, squared_norm(v[j] - v[i]));
    }
  }
  return std::sqrt(best);
}

// 2x2 solve for the intersection of two lines dot(n0,x)=c0, dot(n1,x)=c1.
inline bool solve2(Point2 n0, double c0, Point2 n1, double c1, Point2& out) {
  const double d = cross(n0, n1);
  if (std::abs(d) < 1e-14) return false;
  out = {(c0 * n1.y - c1 * n0.y) / d, (n0.x * c1 - n1.x * c0) / d};
  return true;
}

// Gaussian elimination with partial pivoting on a 3x3 system.
inline bool solve3(double a[3][4]) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-14) return false;
    for (int k = 0; k < 4; ++k) std::swap(a[col][k], a[piv][k]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
    }
  }
  for (int r = 0; r < 3; ++r) a[r][3] /= a[r][r];
  return true;
}

}  // namespace detail

// Strictly convex polygon, counterclockwise vertex order. The validating
// constructor rejects near-degenerate input; intermediate results produced
// by trusted geometric routines (erosion, form bodies) may carry edges
// shorter than the public tolerance and use the trusted() factory.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
    diam_ = detail::ring_diameter(verts_);
    validate();
  }

  static ConvexPolygon trusted(std::vector<Point2> vertices) {
    return ConvexPolygon(std::move(vertices), trusted_tag{});
  }

  const std::vector<Point2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  Point2 vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

  double area() const { return ring_area(verts_); }
  double perimeter() const { return ring_length(verts_); }
  double diameter() const { return diam_; }

  // Outward unit normal of the edge from vertex i to vertex i+1.
  Point2 outward_normal(std::size_t i) const {
    const Point2 e = vertex(i + 1) - vertex(i);
    const double len = norm(e);
    return {e.y / len, -e.x / len};
  }

  // Support value of the edge line: interior points x satisfy
  // dot(outward_normal(i), x) <= support_offset(i).
  double support_offset(std::size_t i) const {
    return dot(outward_normal(i), verts_[i % verts_.size()]);
  }

 private:
  struct trusted_tag {};
  ConvexPolygon(std::vector<Point2> v, trusted_tag) : verts_(std::move(v)) {
    if (verts_.size() < 3) {
      throw std::invalid_argument("polygon needs at least 3 vertices");
    }
    diam_ = detail::ring_diameter(verts_);
  }

  void validate() const {
    const std::size_t n = verts_.size();
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_finite(verts_[i])) {
        throw std::invalid_argument("vertex " + std::to_string(i) + " is not finite");
      }
    }
    if (!(diam_ > 0.0)) throw std::invalid_argument("polygon vertices coincide");
    for (std::size_t i = 0; i < n; ++i) {
      if (distance(verts_[i], verts_[(i + 1) % n]) < tol::geo * diam_) {
        throw std::invalid_argument("vertices " + std::to_string(i) + " and " +
                                    std::to_string((i + 1) % n) + " nearly coincide");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 e0 = verts_[(i + 1) % n] - verts_[i];
      const Point2 e1 = verts_[(i + 2) % n] - verts_[(i + 1) % n];
      if (!(cross(e0, e1) > tol::geo * diam_ * diam_)) {
        throw std::invalid_argument(
            "vertices must be strictly convex in counterclockwise order (corner " +
            std::to_string((i + 1) % n) + ")");
      }
    }
    if (!(ring_area(verts_) > 0.0)) {
      throw std::invalid_argument("vertex order must be counterclockwise");
    }
  }

  std::vector<Point2> verts_;
  double diam_ = 0.0;
};

struct InscribedCircle {
  Point2 center;
  double radius = 0.0;
};

namespace detail {

struct HalfPlane {
  Point2 n;  // unit normal
  double c;  // dot(n, x) <= c
};

inline std::vector<HalfPlane> edge_halfplanes(const ConvexPolygon& p) {
  std::vector<HalfPlane> hp(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    hp[i] = {p.outward_normal(i), p.support_offset(i)};
  }
  return hp;
}

inline bool feasible(const std::vector<HalfPlane>& hp, Point2 x, double slack) {
  for (const auto& h : hp) {
    if (dot(h.n, x) > h.c + slack) return false;
  }
  return true;
}

// Keep the part of a closed chain inside dot(n,x) <= c.
inline std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, Point2 n, double c) {
  std::vector<Point2> out;
  out.reserve(poly.size() + 1);
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % m];
    const double da = dot(n, a) - c;
    const double db = dot(n, b) - c;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      out.push_back(a + (da / (da - db)) * (b - a));
    }
  }
  return out;
}

// Merge floating-point duplicates and forward-collinear corners produced by
// clipping. Thresholds sit at rounding scale, far below tol::geo.
inline void tidy_ring(std::vector<Point2>& v, double scale) {
  const double eps_pt = 1e-13 * scale;
  const double eps_cross = 1e-13 * scale * scale;
  std::vector<Point2> kept;
  kept.reserve(v.size());
  for (const Point2& p : v) {
    if (kept.empty() || distance(kept.back(), p) > eps_pt) kept.push_back(p);
  }
  while (kept.size() > 1 && distance(kept.front(), kept.back()) <= eps_pt) kept.pop_back();
  if (kept.size() >= 3) {
    std::vector<Point2> slim;
    slim.reserve(kept.size());
    const std::size_t n = kept.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 prev = kept[(i + n - 1) % n];
      const Point2 cur = kept[i];
      const Point2 next = kept[(i + 1) % n];
      if (std::abs(cross(cur - prev, next - cur)) > eps_cross) slim.push_back(cur);
    }
    if (slim.size() >= 3) kept = std::move(slim);
  }
  v = std::move(kept);
}

}  // namespace detail

// Center and radius of the largest inscribed disk. The optimum of the
// underlying linear program can be a segment (opposite parallel edges at
// minimal width); in that case the midpoint of the optimal set is returned.
inline InscribedCircle chebyshev_center(const ConvexPolygon& p) {
  const auto hp = detail::edge_halfplanes(p);
  const std::size_t m = hp.size();
  const double diam = p.diameter();

  if (m <= 48) {
    // Candidate optima have three active edge lines; enumerate them.
    double best_r = -std::numeric_limits<double>::infinity();
    Point2 best_c{};
    const double feas = 1e-12 * diam;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::size_t k = j + 1; k < m; ++k) {
          double a[3][4] = {{hp[i].n.x, hp[i].n.y, 1.0, hp[i].c},
                            {hp[j].n.x, hp[j].n.y, 1.0, hp[j].c},
                            {hp[k].n.x, hp[k].n.y, 1.0, hp[k].c}};
          if (!detail::solve3(a)) continue;
          const Point2 c{a[0][3], a[1][3]};
          const double r = a[2][3];
          if (r <= best_r) continue;
          if (detail::feasible(hp, c, feas - r)) {  // dot(n,c) + r <= c + feas
            best_r = r;
            best_c = c;
          }
        }
      }
    }
    if (std::isfinite(best_r)) {
      // Resolve a possibly non-unique center: bounding box midpoint of the
      // optimal set, whose corners are intersections of two shrunk edge lines.
      const double feas2 = 1e-9 * diam;
      double min_x = best_c.x, max_x = best_c.x, min_y = best_c.y, max_y = best_c.y;
      bool found = false;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          Point2 q;
          if (!detail::solve2(hp[i].n, hp[i].c - best_r, hp[j].n, hp[j].c - best_r, q)) continue;
          bool ok = true;
          for (const auto& h : hp) {
            if (dot(h.n, q) > h.c - best_r + feas2) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          if (!found) {
            min_x = max_x = q.x;
            min_y = max_y = q.y;
            found = true;
          } else {
            min_x = std::min(min_x, q.x);
            max_x = std::max(max_x, q.x);
            min_y = std::min(min_y, q.y);
            max_y = std::max(max_y, q.y);
          }
        }
      }
      return {{0.5 * (min_x + max_x), 0.5 * (min_y + max_y)}, best_r};
    }
  }

  // Many edges: bisect the collapse depth of the shrunk intersection and read
  // the center off the last nonempty shrink.
  double lo = 0.0, hi = 0.6 * diam;
  std::vector<Point2> last(p.vertices());
  for (int it = 0; it < 80 && (hi - lo) > 1e-15 * diam; ++it) {
    const double mid = 0.5 * (lo + hi);
    std::vector<Point2> cur(p.vertices());
    for (const auto& h : hp) {
      cur = detail::clip_halfplane(cur, h.n, h.c - mid);
      if (cur.empty()) break;
    }
    if (cur.empty()) {
      hi = mid;
    } else {
      lo = mid;
      last = std::move(cur);
    }
  }
  double min_x = last[0].x, max_x = last[0].x, min_y = last[0].y, max_y = last[0].y;
  for (const Point2& q : last) {
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  }
  return {{0.5 * (min_x + max_x), 0.5 * (min_y + max_y)}, lo};
}

// Intersection of the unit-offset half-planes of all edge normals: the
// polygon with the same normal fan circumscribed about the unit disk.
inline ConvexPolygon form_body(const ConvexPolygon& p) {
  const std::size_t n = p.size();
  std::vector<Point2> verts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 u = p.outward_normal(i);
    const Point2 v = p.outward_normal((i + 1) % n);
    Point2 q;
    if (!detail::solve2(u, 1.0, v, 1.0, q)) {
      throw std::invalid_argument("adjacent edges are parallel; form body vertex at infinity");
    }
    verts[i] = q;
  }
  return ConvexPolygon::trusted(std::move(verts));
}

// A polygon is tangential when all edge lines touch one inscribed circle.
// Least-squares fit of (center, rho) to dot(n_i, c) + rho = support_offset(i);
// accept when the worst residual is small and rho matches the inradius.
// Translation-invariant, so no normalization of the form body is needed.
inline bool is_tangential(const ConvexPolygon& p, double tolerance = tol::tangential) {
  const auto hp = detail::edge_halfplanes(p);
  double a[3][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  for (const auto& h : hp) {
    const double row[3] = {h.n.x, h.n.y, 1.0};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += row[r] * row[c];
      a[r][3] += row[r] * h.c;
    }
  }
  if (!detail::solve3(a)) return false;
  const Point2 c{a[0][3], a[1][3]};
  const double rho = a[2][3];
  double worst = 0.0;
  for (const auto& h : hp) {
    worst = std::max(worst, std::abs(dot(h.n, c) + rho - h.c));
  }
  const double scale = tolerance * p.diameter();
  if (worst > scale) return false;
  return std::abs(rho - chebyshev_center(p).radius) <= scale;
}

inline ConvexPolygon scaled(const ConvexPolygon& p, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("scale factor must be positive and finite");
  }
  std::vector<Point2> verts(p.vertices());
  for (Point2& v : verts) v = factor * v;
  return ConvexPolygon::trusted(std::move(verts));
}

inline ConvexPolygon translated(const ConvexPolygon& p, Point2 shift) {
  std::vector<Point2> verts(p.vertices());
  for (Point2& v : verts) v = v + shift;
  return ConvexPolygon::trusted(std::move(verts));
}

}  // namespace cheegerlab
