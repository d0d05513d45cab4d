#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace proofinfo::report {

inline constexpr std::string_view kToolName = "proofinfo";
inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Pretty JSON with every floating-point number at six decimals. Arrays of
/// scalars stay on one line. Ends with a newline.
std::string dump(const nlohmann::ordered_json& value);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// Fixed six-decimal rendering used by both output formats.
std::string fixed6(double value);

}  // namespace proofinfo::report
