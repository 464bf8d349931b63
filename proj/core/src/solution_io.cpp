#include "disclap/solution_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "disclap/errors.hpp"

namespace disclap {

std::string format_double17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void append_array(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_double17(xs[i]);
  }
  out += ']';
}

std::vector<double> read_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("solution JSON: missing array \"") + key + "\"");
  }
  std::vector<double> out;
  out.reserve(j[key].size());
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw ParseError("solution JSON: non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string solution_to_json(const DiscSolution& sol) {
  std::string out = "{\"radius\":" + format_double17(sol.radius) +
                    ",\"c0\":" + format_double17(sol.c0) + ",\"A\":";
  append_array(out, sol.A);
  out += ",\"B\":";
  append_array(out, sol.B);
  out += "}";
  return out;
}

DiscSolution solution_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("radius") || !j.contains("c0")) {
    throw ParseError("solution JSON: expected {radius, c0, A, B}");
  }
  DiscSolution sol;
  sol.radius = j["radius"].get<double>();
  sol.c0 = j["c0"].get<double>();
  sol.A = read_array(j, "A");
  sol.B = read_array(j, "B");
  if (!(sol.radius > 0.0) || !std::isfinite(sol.radius)) {
    throw ParseError("solution JSON: radius must be positive");
  }
  if (sol.A.size() != sol.B.size()) {
    throw ParseError("solution JSON: A and B must have equal length");
  }
  return sol;
}

void save_solution(const DiscSolution& sol, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << solution_to_json(sol) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

DiscSolution load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return solution_from_json(ss.str());
}

}  // namespace disclap
