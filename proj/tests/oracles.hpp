#pragma once

// Test-side reference implementations, written independently of the library:
// half-plane intersection by feasible-vertex enumeration (the library clips
// Sutherland-Hodgman style), Minkowski sums by the rotating edge merge, and
// trapezoid-rule polygon measures. Everything here works on raw vertex
// vectors so degenerate and near-degenerate rings can be probed directly.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cheegerlab/geometry.hpp"

namespace oracle {

using cheegerlab::Point2;

// Trapezoid-rule area of a closed CCW ring (distinct from the library's
// vertex-anchored shoelace).
inline double ring_area(const std::vector<Point2>& v) {
  double twice = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % n];
    twice += (p.x - q.x) * (p.y + q.y);
  }
  return 0.5 * twice;
}

inline double ring_perimeter(const std::vector<Point2>& v) {
  double len = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Point2 d = v[(i + 1) % n] - v[i];
    len += std::hypot(d.x, d.y);
  }
  return len;
}

struct Line {
  // dot(n, x) <= c
  Point2 n;
  double c = 0.0;
};

// Intersection of half-planes by brute force: every pairwise line crossing
// that satisfies all constraints is a candidate vertex; the hull is those
// candidates sorted by angle about their centroid. Quadratic and slow, which
// is fine for an oracle.
inline std::vector<Point2> halfplane_intersection(const std::vector<Line>& lines,
                                                  double feas_slack) {
  std::vector<Point2> cand;
  const std::size_t m = lines.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double det = lines[i].n.x * lines[j].n.y - lines[i].n.y * lines[j].n.x;
      if (std::abs(det) < 1e-14) continue;
      const Point2 q{(lines[i].c * lines[j].n.y - lines[j].c * lines[i].n.y) / det,
                     (lines[i].n.x * lines[j].c - lines[j].n.x * lines[i].c) / det};
      bool inside = true;
      for (const Line& l : lines) {
        if (l.n.x * q.x + l.n.y * q.y > l.c + feas_slack) {
          inside = false;
          break;
        }
      }
      if (inside) cand.push_back(q);
    }
  }
  if (cand.empty()) return {};
  Point2 centroid{0.0, 0.0};
  for (const Point2& p : cand) centroid = centroid + p;
  centroid = (1.0 / static_cast<double>(cand.size())) * centroid;
  std::sort(cand.begin(), cand.end(), [&](const Point2& a, const Point2& b) {
    return std::atan2(a.y - centroid.y, a.x - centroid.x) <
           std::atan2(b.y - centroid.y, b.x - centroid.x);
  });
  // Merge duplicates produced by three concurrent lines.
  std::vector<Point2> out;
  for (const Point2& p : cand) {
    if (out.empty() || cheegerlab::distance(out.back(), p) > 1e-11) out.push_back(p);
  }
  while (out.size() > 1 && cheegerlab::distance(out.front(), out.back()) <= 1e-11) {
    out.pop_back();
  }
  return out;
}

// Edge half-planes of a raw CCW ring, shifted inward by depth t.
inline std::vector<Line> eroded_halfplanes(const std::vector<Point2>& ring, double t) {
  std::vector<Line> lines;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % n];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const Point2 nrm{(b.y - a.y) / len, -(b.x - a.x) / len};
    lines.push_back({nrm, nrm.x * a.x + nrm.y * a.y - t});
  }
  return lines;
}

inline double eroded_area(const std::vector<Point2>& ring, double t) {
  const std::vector<Point2> inner = halfplane_intersection(eroded_halfplanes(ring, t), 1e-9);
  return inner.size() < 3 ? 0.0 : oracle::ring_area(inner);
}

// Minkowski sum of two convex CCW rings by the rotating edge merge: start at
// the bottom-most vertex of each and interleave edges by polar angle.
inline std::vector<Point2> minkowski_sum(std::vector<Point2> a, std::vector<Point2> b) {
  const auto bottom = [](const std::vector<Point2>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i].y < v[k].y || (v[i].y == v[k].y && v[i].x < v[k].x)) k = i;
    }
    return k;
  };
  std::rotate(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(bottom(a)), a.end());
  std::rotate(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(bottom(b)), b.end());
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Point2> out;
  out.reserve(na + nb);
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    out.push_back(a[i % na] + b[j % nb]);
    const Point2 ea = a[(i + 1) % na] - a[i % na];
    const Point2 eb = b[(j + 1) % nb] - b[j % nb];
    const double turn = ea.x * eb.y - ea.y * eb.x;
    if (j >= nb || (i < na && turn > 0.0)) {
      ++i;
    } else if (i >= na || turn < 0.0) {
      ++j;
    } else {
      ++i;  // parallel edges advance together; the other is picked up next
      ++j;
    }
  }
  return out;
}

// Regular n-gon inscribed in a circle of given radius, as a raw ring. Used to
// approximate disks in Minkowski-sum cross-checks; deliberately bypasses the
// library's polygon validation so n can be large.
inline std::vector<Point2> inscribed_ngon(int n, double radius) {
  std::vector<Point2> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double ang = 2.0 * cheegerlab::pi * k / n;
    v[static_cast<std::size_t>(k)] = {radius * std::cos(ang), radius * std::sin(ang)};
  }
  return v;
}

// Cheeger constant of an a x b rectangle from the quadratic the inner-area
// equation reduces to; independent of the library's bisection.
inline double rect_cheeger(double a, double b) {
  const double q = 4.0 - cheegerlab::pi;
  return q / (a + b - std::sqrt((a + b) * (a + b) - q * a * b));
}

}  // namespace oracle
