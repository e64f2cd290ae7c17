#pragma once

// Deterministic SVG rendering of a body, optionally with its Cheeger set.
// Straight pieces become L commands and circular pieces become A commands so
// the picture is exact, not a polyline approximation. When the Cheeger set is
// a strict subset, the flat part of its boundary (the contact with the body's
// eroded kernel geometry) is stroked separately in a highlight color.

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "cheegerlab/body.hpp"
#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/format.hpp"

namespace cheegerlab {

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

inline Point2 arc_point(const ArcPiece& a, double theta) {
  return {a.center.x + a.radius * std::cos(theta), a.center.y + a.radius * std::sin(theta)};
}

// One closed path through the piece chain. Arcs wider than a half turn are
// split in two because an SVG A command cannot disambiguate them by endpoints
// alone without the large-arc flag games; two short arcs are simpler.
inline std::string piece_path(const std::vector<BoundaryPiece>& pieces) {
  std::string d;
  bool started = false;
  const auto move_or_line = [&](Point2 p) {
    if (!started) {
      d += "M " + svg_num(p.x) + " " + svg_num(p.y);
      started = true;
    }
  };
  for (const BoundaryPiece& piece : pieces) {
    if (const EdgePiece* e = std::get_if<EdgePiece>(&piece)) {
      move_or_line(e->a);
      d += " L " + svg_num(e->b.x) + " " + svg_num(e->b.y);
    } else {
      const ArcPiece& a = std::get<ArcPiece>(piece);
      move_or_line(arc_point(a, a.theta0));
      const int segs = a.theta1 - a.theta0 > 3.1 ? 2 : 1;
      for (int k = 1; k <= segs; ++k) {
        const Point2 q = arc_point(a, a.theta0 + (a.theta1 - a.theta0) * k / segs);
        const std::string r = svg_num(a.radius);
        d += " A " + r + " " + r + " 0 0 1 " + svg_num(q.x) + " " + svg_num(q.y);
      }
    }
  }
  d += " Z";
  return d;
}

}  // namespace detail

// Render the body outline; when `result` is non-null, overlay the Cheeger set
// and highlight its contact portion. Y axis is flipped via a transform so the
// mathematical orientation is preserved on screen.
inline std::string render_svg(const RoundedBody& b, const CheegerResult* result = nullptr) {
  // Bounding box from a coarse polyline; exact enough for a padded viewBox.
  const std::vector<Point2> outline = to_polyline(b, std::max(b.extent(), 1.0) * 1e-3);
  double min_x = outline[0].x, max_x = outline[0].x;
  double min_y = outline[0].y, max_y = outline[0].y;
  for (const Point2& p : outline) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double pad = 0.1 * std::max(max_x - min_x, max_y - min_y);
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;

  const double stroke = 0.006 * std::max(max_x - min_x, max_y - min_y);
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + detail::svg_num(min_x) +
         " " + detail::svg_num(-max_y) + " " + detail::svg_num(max_x - min_x) + " " +
         detail::svg_num(max_y - min_y) + "\" width=\"640\" height=\"640\">\n";
  svg += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\" "
         "stroke-linejoin=\"round\" stroke-width=\"" +
         detail::svg_num(stroke) + "\">\n";
  svg += "<path class=\"body\" stroke=\"#1f3a5f\" fill=\"#dbe7f5\" d=\"" +
         detail::piece_path(boundary_pieces(b)) + "\"/>\n";

  if (result != nullptr) {
    const std::vector<BoundaryPiece> cheeger_pieces = boundary_pieces(result->cheeger_set);
    svg += "<path class=\"cheeger-set\" stroke=\"#b34700\" fill=\"#f5c38a\" "
           "fill-opacity=\"0.55\" d=\"" +
           detail::piece_path(cheeger_pieces) + "\"/>\n";
    // Contact part of the free boundary: the whole set when it fills the body,
    // otherwise the straight pieces inherited from the eroded kernel.
    if (result->t_star > b.radius()) {
      std::string contact;
      for (const BoundaryPiece& piece : cheeger_pieces) {
        if (const EdgePiece* e = std::get_if<EdgePiece>(&piece)) {
          contact += "M " + detail::svg_num(e->a.x) + " " + detail::svg_num(e->a.y) +
                     " L " + detail::svg_num(e->b.x) + " " + detail::svg_num(e->b.y) + " ";
        }
      }
      if (!contact.empty()) {
        contact.pop_back();
        svg += "<path class=\"contact\" stroke=\"#d11141\" stroke-width=\"" +
               detail::svg_num(1.8 * stroke) + "\" d=\"" + contact + "\"/>\n";
      }
    } else {
      svg += "<path class=\"contact\" stroke=\"#d11141\" stroke-width=\"" +
             detail::svg_num(1.8 * stroke) + "\" d=\"" +
             detail::piece_path(cheeger_pieces) + "\"/>\n";
    }
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace cheegerlab
