#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qgame/cli.hpp"

namespace qgame::cli {

namespace {

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void write(std::string& out, const nlohmann::ordered_json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += nlohmann::json(key).dump();
        out += ": ";
        write(out, value, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        write(out, e, depth + 1);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_json(const nlohmann::ordered_json& value) {
  std::string out;
  write(out, value, 0);
  out += "\n";
  return out;
}

nlohmann::ordered_json strategy_json(const Su2Element& s) {
  const Angles& a = s.angles();
  const Vec4& u = s.vector();
  return {{"angles", {a.theta, a.alpha, a.beta}}, {"vector", {u[0], u[1], u[2], u[3]}}};
}

}  // namespace qgame::cli
