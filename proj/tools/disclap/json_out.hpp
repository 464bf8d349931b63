#pragma once

#include <string>

#include <json.hpp>

namespace cli {

/// Compact JSON text with every floating-point number rendered at 17
/// significant digits, so emitted values parse back bit-exactly.
std::string dump_json17(const nlohmann::json& j);

/// dump_json17 to stdout with a trailing newline.
void emit_json(const nlohmann::json& j);

}  // namespace cli
