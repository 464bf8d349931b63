#include "cli_common.hpp"

#include <charconv>

#include "disclap/errors.hpp"

namespace cli {

disclap::BoundarySpec BoundaryFlags::resolve() const {
  if (!expression.empty()) return disclap::BoundarySpec::parse(expression);
  if (!csv_path.empty()) return disclap::BoundarySpec::load_csv(csv_path);
  throw disclap::InvalidArgument("boundary data required: pass --f or --samples");
}

namespace {

std::pair<std::string_view, std::string_view> split_comma(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw disclap::ParseError("expected two comma-separated values, got \"" +
                              text + "\"");
  }
  return {std::string_view(text).substr(0, comma),
          std::string_view(text).substr(comma + 1)};
}

double parse_double_field(std::string_view body, const std::string& context) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    throw disclap::ParseError(context + ": bad number \"" + std::string(body) + "\"");
  }
  return v;
}

int parse_int_field(std::string_view body, const std::string& context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    throw disclap::ParseError(context + ": bad integer \"" + std::string(body) + "\"");
  }
  return v;
}

}  // namespace

disclap::PolarPoint parse_point(const std::string& text) {
  const auto [left, right] = split_comma(text);
  return {parse_double_field(left, "--point"), parse_double_field(right, "--point")};
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto [left, right] = split_comma(text);
  const int nr = parse_int_field(left, "--grid");
  const int nt = parse_int_field(right, "--grid");
  if (nr < 1 || nt < 1) throw disclap::InvalidArgument("--grid sizes must be >= 1");
  return {nr, nt};
}

const char* fixture_expression(const std::string& name) {
  if (name == "sin2") return "sin(2*t)";
  if (name == "cos1sin3") return "cos(t) + 3*sin(3*t)";
  if (name == "const7") return "7";
  throw disclap::InvalidArgument(
      "unknown fixture \"" + name + "\"; expected sin2, cos1sin3 or const7");
}

}  // namespace cli
