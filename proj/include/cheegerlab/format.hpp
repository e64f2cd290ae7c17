#pragma once

// Deterministic text output. All numbers are printed with 17 significant
// digits ('%.17g', C locale), enough to round-trip any double, so repeated
// runs produce byte-identical files. JSON documents are pretty-printed with
// two-space indentation and keys in sorted order.

#include <cstdio>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace cheegerlab {

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::map<std::string, Json>;  // std::map keeps keys sorted

  Json() : v_(nullptr) {}
  Json(std::nullptr_t) : v_(nullptr) {}
  Json(bool b) : v_(b) {}
  Json(double d) : v_(d) {}
  Json(int i) : v_(static_cast<double>(i)) {}
  Json(const char* s) : v_(std::string(s)) {}
  Json(std::string s) : v_(std::move(s)) {}
  Json(Array a) : v_(std::move(a)) {}
  Json(Object o) : v_(std::move(o)) {}

  // Serialize with a trailing newline so CLI output always ends a line.
  std::string dump() const {
    std::string out;
    write(out, 0);
    out.push_back('\n');
    return out;
  }

 private:
  static void write_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out.push_back(c);
          }
      }
    }
    out.push_back('"');
  }

  void write(std::string& out, int depth) const {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    if (std::holds_alternative<std::nullptr_t>(v_)) {
      out += "null";
    } else if (const bool* b = std::get_if<bool>(&v_)) {
      out += *b ? "true" : "false";
    } else if (const double* d = std::get_if<double>(&v_)) {
      out += fmt_double(*d);
    } else if (const std::string* s = std::get_if<std::string>(&v_)) {
      write_escaped(out, *s);
    } else if (const Array* a = std::get_if<Array>(&v_)) {
      if (a->empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < a->size(); ++i) {
        out += pad_in;
        (*a)[i].write(out, depth + 1);
        if (i + 1 < a->size()) out.push_back(',');
        out.push_back('\n');
      }
      out += pad + "]";
    } else {
      const Object& o = std::get<Object>(v_);
      if (o.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : o) {
        out += pad_in;
        write_escaped(out, key);
        out += ": ";
        value.write(out, depth + 1);
        if (++i < o.size()) out.push_back(',');
        out.push_back('\n');
      }
      out += pad + "}";
    }
  }

  std::variant<std::nullptr_t, bool, double, std::string, Array, Object> v_;
};

}  // namespace cheegerlab
