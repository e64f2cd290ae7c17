#pragma once

// Construction of rounded bodies from named shapes or a JSON document:
//   {"shape": "square"|"rect"|"regpoly"|"triangle"|"disk"|"custom",
//    "params": [...], "vertices": [[x,y],...], "radius": s}
// Validation failures throw std::invalid_argument naming the offending field.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cheegerlab/body.hpp"
#include "cheegerlab/geometry.hpp"
#include "cheegerlab/verify.hpp"

namespace cheegerlab {

enum class Shape { square, rect, regpoly, triangle, disk, custom };

inline Shape shape_from_string(const std::string& s) {
  if (s == "square") return Shape::square;
  if (s == "rect") return Shape::rect;
  if (s == "regpoly") return Shape::regpoly;
  if (s == "triangle") return Shape::triangle;
  if (s == "disk") return Shape::disk;
  if (s == "custom") return Shape::custom;
  throw std::invalid_argument(
      "shape: expected one of square, rect, regpoly, triangle, disk, custom");
}

struct BodySpec {
  Shape shape = Shape::square;
  std::vector<double> params;
  std::vector<Point2> vertices;  // custom only
  double radius = 0.0;           // extra rounding added to the kernel
};

inline RoundedBody make_square(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("params: square side must be positive");
  return RoundedBody(Kernel(ConvexPolygon({{0.0, 0.0}, {a, 0.0}, {a, a}, {0.0, a}})), 0.0);
}

inline RoundedBody make_rect(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("params: rectangle sides must be positive");
  }
  return RoundedBody(Kernel(ConvexPolygon({{0.0, 0.0}, {a, 0.0}, {a, b}, {0.0, b}})), 0.0);
}

inline RoundedBody make_disk(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("params: disk radius must be positive");
  return RoundedBody(Kernel(Point2{0.0, 0.0}), r);
}

inline RoundedBody make_body(const BodySpec& spec) {
  const auto expect_params = [&](std::size_t n, const char* what) {
    if (spec.params.size() != n) {
      throw std::invalid_argument(std::string("params: ") + what);
    }
  };
  RoundedBody base = [&]() -> RoundedBody {
    switch (spec.shape) {
      case Shape::square:
        expect_params(1, "square takes [side]");
        return make_square(spec.params[0]);
      case Shape::rect:
        expect_params(2, "rect takes [width, height]");
        return make_rect(spec.params[0], spec.params[1]);
      case Shape::regpoly: {
        expect_params(2, "regpoly takes [sides, side_length]");
        const double n_raw = spec.params[0];
        const int n = static_cast<int>(n_raw);
        if (n != n_raw || n < 3) {
          throw std::invalid_argument("params: regpoly side count must be an integer >= 3");
        }
        return RoundedBody(Kernel(regular_polygon(n, spec.params[1])), 0.0);
      }
      case Shape::triangle: {
        expect_params(6, "triangle takes [x1, y1, x2, y2, x3, y3]");
        return RoundedBody(Kernel(ConvexPolygon({{spec.params[0], spec.params[1]},
                                                 {spec.params[2], spec.params[3]},
                                                 {spec.params[4], spec.params[5]}})),
                           0.0);
      }
      case Shape::disk:
        expect_params(1, "disk takes [radius]");
        return make_disk(spec.params[0]);
      case Shape::custom: {
        if (!spec.params.empty()) {
          throw std::invalid_argument("params: custom shape takes vertices, not params");
        }
        if (spec.vertices.size() < 3) {
          throw std::invalid_argument("vertices: custom shape needs at least 3 vertices");
        }
        return RoundedBody(Kernel(ConvexPolygon(spec.vertices)), 0.0);
      }
    }
    throw std::invalid_argument("shape: unknown shape");
  }();
  if (spec.radius == 0.0) return base;
  if (!(spec.radius > 0.0)) {
    throw std::invalid_argument("radius: must be a nonnegative number");
  }
  if (spec.shape == Shape::disk) {
    throw std::invalid_argument("radius: a disk already carries its radius in params");
  }
  return RoundedBody(base.kernel(), spec.radius);
}

inline BodySpec body_spec_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("body spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("body spec must be a JSON object");

  BodySpec spec;
  bool saw_shape = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "shape") {
      if (!value.is_string()) throw std::invalid_argument("shape: must be a string");
      spec.shape = shape_from_string(value.get<std::string>());
      saw_shape = true;
    } else if (key == "params") {
      if (!value.is_array()) throw std::invalid_argument("params: must be an array of numbers");
      for (const auto& item : value) {
        if (!item.is_number()) throw std::invalid_argument("params: must be an array of numbers");
        spec.params.push_back(item.get<double>());
      }
    } else if (key == "vertices") {
      if (!value.is_array()) {
        throw std::invalid_argument("vertices: must be an array of [x, y] pairs");
      }
      for (const auto& item : value) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
            !item[1].is_number()) {
          throw std::invalid_argument("vertices: must be an array of [x, y] pairs");
        }
        spec.vertices.push_back({item[0].get<double>(), item[1].get<double>()});
      }
    } else if (key == "radius") {
      if (!value.is_number()) throw std::invalid_argument("radius: must be a nonnegative number");
      spec.radius = value.get<double>();
      if (!(spec.radius >= 0.0)) {
        throw std::invalid_argument("radius: must be a nonnegative number");
      }
    } else {
      throw std::invalid_argument("unknown field '" + key + "' in body spec");
    }
  }
  if (!saw_shape) throw std::invalid_argument("shape: required field is missing");
  return spec;
}

inline RoundedBody body_from_json(const std::string& text) {
  return make_body(body_spec_from_json(text));
}

}  // namespace cheegerlab
