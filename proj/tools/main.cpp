// cheeger-lab: Cheeger constants and parallel-body verification for planar
// convex bodies (polygon-plus-disk form). Subcommands:
//
//   body    measures, tangential flag, last tangential offset, form body
//   cheeger Cheeger constant / set / contact length / flow derivative
//   scan    sample the parallel flow on a grid (CSV or JSON)
//   verify  run the full inequality and monotonicity suite on one body
//   repro   canned reproductions: tailed | rect-ratio | quad-scaling |
//           thin-rect | bessel
//   render  SVG picture, optionally with the Cheeger set overlaid
//
// Exit codes: 0 success, 1 computational failure (JSON error object on
// stdout), 2 usage or input validation error.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cheegerlab/body.hpp"
#include "cheegerlab/bodyspec.hpp"
#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/format.hpp"
#include "cheegerlab/serialize.hpp"
#include "cheegerlab/spectral.hpp"
#include "cheegerlab/svg.hpp"
#include "cheegerlab/verify.hpp"

namespace {

using namespace cheegerlab;

struct ShapeFlags {
  std::string shape;
  double a = 0.0;
  double b = 0.0;
  double r = 0.0;
  int n = 0;
  std::string vertices;
  double radius = 0.0;
  std::string spec_path;
};

void add_shape_flags(CLI::App* cmd, ShapeFlags& f) {
  cmd->add_option("--shape", f.shape, "square | rect | regpoly | triangle | disk | custom");
  cmd->add_option("--a", f.a, "first size parameter (side / width)");
  cmd->add_option("--b", f.b, "second size parameter (height)");
  cmd->add_option("--n", f.n, "side count for regpoly");
  cmd->add_option("--r", f.r, "disk radius");
  cmd->add_option("--vertices", f.vertices, "vertex list 'x,y x,y ...' (triangle, custom)");
  cmd->add_option("--radius", f.radius, "rounding radius added to the kernel");
  cmd->add_option("--spec", f.spec_path, "JSON body spec file (overrides other shape flags)");
}

std::vector<Point2> parse_vertex_list(const std::string& text) {
  std::vector<Point2> pts;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    double x = 0.0, y = 0.0;
    int consumed = 0;
    if (std::sscanf(tok.c_str(), "%lf,%lf%n", &x, &y, &consumed) != 2 ||
        consumed != static_cast<int>(tok.size())) {
      throw std::invalid_argument("vertices: expected a list like '0,0 1,0 0.5,1'");
    }
    pts.push_back({x, y});
  }
  return pts;
}

BodySpec spec_from_flags(const ShapeFlags& f) {
  if (!f.spec_path.empty()) {
    std::ifstream in(f.spec_path, std::ios::binary);
    if (!in) throw std::invalid_argument("spec: cannot read file '" + f.spec_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return body_spec_from_json(buf.str());
  }
  if (f.shape.empty()) {
    throw std::invalid_argument("shape: pass --shape or --spec to pick a body");
  }
  BodySpec spec;
  spec.shape = shape_from_string(f.shape);
  spec.radius = f.radius;
  switch (spec.shape) {
    case Shape::square:
      spec.params = {f.a};
      break;
    case Shape::rect:
      spec.params = {f.a, f.b};
      break;
    case Shape::regpoly:
      spec.params = {static_cast<double>(f.n), f.a};
      break;
    case Shape::disk:
      spec.params = {f.r};
      break;
    case Shape::triangle: {
      const std::vector<Point2> pts = parse_vertex_list(f.vertices);
      if (pts.size() != 3) {
        throw std::invalid_argument("vertices: triangle needs exactly 3 points");
      }
      spec.params = {pts[0].x, pts[0].y, pts[1].x, pts[1].y, pts[2].x, pts[2].y};
      break;
    }
    case Shape::custom:
      spec.vertices = parse_vertex_list(f.vertices);
      break;
  }
  return spec;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

Json error_json(const std::string& message) {
  Json::Object o;
  o["error"] = Json(message);
  return Json(std::move(o));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheeger constants and parallel-body checks for planar convex bodies"};
  app.require_subcommand(1);

  ShapeFlags body_flags, cheeger_flags, scan_flags, verify_flags, render_flags;
  std::string out_path;
  std::string format = "csv";
  double t_min = 0.0, t_max = 0.0, tol = 1e-9, eps = 0.1;
  int grid = 64;
  bool with_cheeger = false;
  std::string repro_name;

  CLI::App* cmd_body = app.add_subcommand("body", "measures and structure of a body");
  add_shape_flags(cmd_body, body_flags);
  cmd_body->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* cmd_cheeger = app.add_subcommand("cheeger", "Cheeger constant and set");
  add_shape_flags(cmd_cheeger, cheeger_flags);
  cmd_cheeger->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* cmd_scan = app.add_subcommand("scan", "sample the parallel flow");
  add_shape_flags(cmd_scan, scan_flags);
  cmd_scan->add_option("--tmin", t_min, "start offset (must exceed -inradius)")->required();
  cmd_scan->add_option("--tmax", t_max, "end offset")->required();
  cmd_scan->add_option("--grid", grid, "number of grid points (default 64)");
  cmd_scan->add_option("--format", format, "csv | json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_scan->add_option("--tol", tol, "relative tolerance for the trend verdict");
  cmd_scan->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the full check suite on a body");
  add_shape_flags(cmd_verify, verify_flags);
  cmd_verify->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* cmd_repro = app.add_subcommand("repro", "canned reproduction checks");
  cmd_repro
      ->add_option("name", repro_name,
                   "tailed | rect-ratio | quad-scaling | thin-rect | bessel")
      ->required()
      ->check(CLI::IsMember({"tailed", "rect-ratio", "quad-scaling", "thin-rect", "bessel"}));
  cmd_repro->add_option("--eps", eps, "tail width for the tailed reproduction (default 0.1)");
  cmd_repro->add_option("--out", out_path, "write output here instead of stdout");

  CLI::App* cmd_render = app.add_subcommand("render", "SVG picture of a body");
  add_shape_flags(cmd_render, render_flags);
  cmd_render->add_flag("--with-cheeger", with_cheeger, "overlay the Cheeger set");
  cmd_render->add_option("--out", out_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_body->parsed()) {
      emit(body_report_json(make_body(spec_from_flags(body_flags))).dump(), out_path);
    } else if (cmd_cheeger->parsed()) {
      const RoundedBody b = make_body(spec_from_flags(cheeger_flags));
      emit(to_json(cheeger(b)).dump(), out_path);
    } else if (cmd_scan->parsed()) {
      const RoundedBody b = make_body(spec_from_flags(scan_flags));
      const std::vector<ScanRow> rows = scan_rows(b, t_min, t_max, grid);
      if (format == "csv") {
        emit(scan_csv(rows), out_path);
      } else {
        std::vector<double> invariant(rows.size());
        Json::Array json_rows;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          invariant[i] = rows[i].sqrt_area_h;
          Json::Object o;
          o["t"] = Json(rows[i].t);
          o["area"] = Json(rows[i].area);
          o["perimeter"] = Json(rows[i].perimeter);
          o["inradius"] = Json(rows[i].inradius);
          o["h"] = Json(rows[i].h);
          o["sqrtA_h"] = Json(rows[i].sqrt_area_h);
          json_rows.push_back(Json(std::move(o)));
        }
        double scale = 0.0;
        for (const double v : invariant) scale = std::max(scale, std::abs(v));
        Json::Object doc;
        doc["rows"] = Json(std::move(json_rows));
        doc["scaled_invariant_verdict"] =
            Json(to_string(classify_trend(invariant, tol * scale, nullptr)));
        emit(Json(std::move(doc)).dump(), out_path);
      }
    } else if (cmd_verify->parsed()) {
      const RoundedBody b = make_body(spec_from_flags(verify_flags));
      const std::vector<CheckReport> reports = run_default_suite(b);
      bool all_passed = true;
      Json::Array checks;
      for (const CheckReport& rep : reports) {
        all_passed = all_passed && rep.passed;
        checks.push_back(to_json(rep));
      }
      Json::Object doc;
      doc["body"] = to_json(b);
      doc["checks"] = Json(std::move(checks));
      doc["passed"] = Json(all_passed);
      emit(Json(std::move(doc)).dump(), out_path);
      return all_passed ? 0 : 1;
    } else if (cmd_repro->parsed()) {
      CheckReport rep;
      if (repro_name == "tailed") {
        rep = repro_tailed_counterexample(eps, uniform_grid(0.25 * eps / 32.0, 0.25 * eps, 32));
      } else if (repro_name == "rect-ratio") {
        rep = repro_rectangle_ratio();
      } else if (repro_name == "quad-scaling") {
        const double r = RoundedBody(Kernel(quad_with_vanishing_edge()), 0.0).inradius();
        rep = repro_quad_scaling(uniform_grid(0.05 * r, 0.95 * r, 16));
      } else if (repro_name == "thin-rect") {
        rep = repro_thin_rectangle_condition();
      } else {  // bessel
        rep.name = "bessel_airy_bound_sweep";
        const bool sweep = bessel_bound_check(1000);
        const bool planar = constants::j2 < pi;
        rep.passed = sweep && planar;
        rep.witness = {2.0, constants::j2, pi};
        rep.note = "zero bound for dimensions 3..1000 plus the planar comparison";
      }
      emit(to_json(rep).dump(), out_path);
      return rep.passed ? 0 : 1;
    } else if (cmd_render->parsed()) {
      const RoundedBody b = make_body(spec_from_flags(render_flags));
      if (with_cheeger) {
        const CheegerResult res = cheeger(b);
        emit(render_svg(b, &res), out_path);
      } else {
        emit(render_svg(b), out_path);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::fputs(error_json(e.what()).dump().c_str(), stdout);
    return 2;
  } catch (const std::exception& e) {
    std::fputs(error_json(e.what()).dump().c_str(), stdout);
    return 1;
  }
  return 0;
}
