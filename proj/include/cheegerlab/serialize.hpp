#pragma once

// JSON / CSV views of the library's result types. Output is deterministic:
// object keys are sorted, doubles are printed with fmt_double, rows end in \n.

#include <string>
#include <vector>

#include "cheegerlab/body.hpp"
#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/format.hpp"
#include "cheegerlab/geometry.hpp"
#include "cheegerlab/verify.hpp"

namespace cheegerlab {

inline Json to_json(const Point2& p) {
  return Json(Json::Array{Json(p.x), Json(p.y)});
}

inline Json to_json(const Kernel& k) {
  Json::Object o;
  switch (k.kind()) {
    case Kernel::Kind::polygon: {
      o["kind"] = "polygon";
      Json::Array verts;
      for (const Point2& p : k.polygon().vertices()) verts.push_back(to_json(p));
      o["vertices"] = Json(std::move(verts));
      break;
    }
    case Kernel::Kind::segment:
      o["kind"] = "segment";
      o["endpoints"] = Json(Json::Array{to_json(k.segment().a), to_json(k.segment().b)});
      break;
    case Kernel::Kind::point:
      o["kind"] = "point";
      o["point"] = to_json(k.point());
      break;
  }
  return Json(std::move(o));
}

inline Json to_json(const RoundedBody& b) {
  Json::Object o;
  o["kernel"] = to_json(b.kernel());
  o["radius"] = Json(b.radius());
  return Json(std::move(o));
}

inline Json to_json(const CheegerResult& r) {
  Json::Object o;
  o["h"] = Json(r.h);
  o["t_star"] = Json(r.t_star);
  o["cheeger_set"] = to_json(r.cheeger_set);
  o["area"] = Json(r.area);
  o["perimeter"] = Json(r.perimeter);
  o["contact_length"] = Json(r.contact_length);
  o["derivative_at_zero"] = Json(r.derivative_at_zero);
  return Json(std::move(o));
}

inline Json to_json(const CheckReport& r) {
  Json::Object o;
  o["name"] = Json(r.name);
  o["passed"] = Json(r.passed);
  o["tolerance"] = Json(r.tolerance);
  o["note"] = Json(r.note);
  Json::Object w;
  w["t"] = Json(r.witness.t);
  w["lhs"] = Json(r.witness.lhs);
  w["rhs"] = Json(r.witness.rhs);
  o["witness"] = Json(std::move(w));
  return Json(std::move(o));
}

inline Json to_json(const ScanSeries& s) {
  Json::Object o;
  Json::Array ts, vs;
  for (double t : s.t_values) ts.push_back(Json(t));
  for (double v : s.values) vs.push_back(Json(v));
  o["t_values"] = Json(std::move(ts));
  o["values"] = Json(std::move(vs));
  o["verdict"] = Json(to_string(s.verdict));
  o["max_violation"] = Json(s.max_violation);
  return Json(std::move(o));
}

// Full descriptive report for a body: measures, tangential flag, the last
// tangential offset along the inward flow (null for disks, where the notion
// degenerates), and the unit-offset form body when the input is a polygon.
inline Json body_report_json(const RoundedBody& b) {
  Json::Object o;
  o["body"] = to_json(b);
  o["area"] = Json(b.area());
  o["perimeter"] = Json(b.perimeter());
  o["inradius"] = Json(b.inradius());
  o["tangential"] = Json(body_is_tangential(b));
  o["tau"] = b.is_disk() ? Json(nullptr) : Json(tau(b));
  if (b.kernel().kind() == Kernel::Kind::polygon && b.radius() == 0.0) {
    const ConvexPolygon fb = form_body(b.kernel().polygon());
    Json::Array verts;
    for (const Point2& p : fb.vertices()) verts.push_back(to_json(p));
    o["form_body"] = Json(std::move(verts));
  } else {
    o["form_body"] = Json(nullptr);
  }
  return Json(std::move(o));
}

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "t,area,perimeter,inradius,h,sqrtA_h\n";
  for (const ScanRow& r : rows) {
    out += fmt_double(r.t);
    out += ',';
    out += fmt_double(r.area);
    out += ',';
    out += fmt_double(r.perimeter);
    out += ',';
    out += fmt_double(r.inradius);
    out += ',';
    out += fmt_double(r.h);
    out += ',';
    out += fmt_double(r.sqrt_area_h);
    out += '\n';
  }
  return out;
}

}  // namespace cheegerlab
