#pragma once

#include <string>

#include "disclap/spectral.hpp"

namespace disclap {

/// Text form that parses back to the same double: 17 significant digits,
/// trailing zeros trimmed by %g.
std::string format_double17(double v);

/// JSON form {"radius": R, "c0": ..., "A": [...], "B": [...]} with full
/// double precision.
std::string solution_to_json(const DiscSolution& sol);

/// Inverse of solution_to_json; throws ParseError on malformed input.
DiscSolution solution_from_json(const std::string& text);

void save_solution(const DiscSolution& sol, const std::string& path);
DiscSolution load_solution(const std::string& path);

}  // namespace disclap
