#include "json_out.hpp"

#include <cstdio>

#include "disclap/solution_io.hpp"

namespace cli {

namespace {

void render(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        render(it.value(), out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        render(v, out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float:
      out += disclap::format_double17(j.get<double>());
      break;
    default:
      out += j.dump();  // ints, strings, bools, null
      break;
  }
}

}  // namespace

std::string dump_json17(const nlohmann::json& j) {
  std::string out;
  render(j, out);
  return out;
}

void emit_json(const nlohmann::json& j) {
  std::fputs(dump_json17(j).c_str(), stdout);
  std::fputc('\n', stdout);
}

}  // namespace cli
