#pragma once

#include <string>
#include <utility>

#include <CLI11.hpp>

#include "disclap/boundary.hpp"
#include "disclap/geometry.hpp"

namespace cli {

/// --f EXPR / --samples FILE.csv pair; exactly one must be given.
struct BoundaryFlags {
  std::string expression;
  std::string csv_path;

  void attach(CLI::App& app) {
    auto* f = app.add_option("--f", expression,
                             "boundary data f(theta) as an expression, e.g. "
                             "\"100*sin(2*t)\"");
    auto* s = app.add_option("--samples", csv_path,
                             "boundary data as single-column CSV of uniform "
                             "samples");
    f->excludes(s);
    s->excludes(f);
  }

  disclap::BoundarySpec resolve() const;
};

/// "r,theta" (radians)
disclap::PolarPoint parse_point(const std::string& text);

/// "NR,NT"
std::pair<int, int> parse_grid(const std::string& text);

/// Named boundary fixtures used by `validate` and the docs.
const char* fixture_expression(const std::string& name);

}  // namespace cli
