#pragma once

#include <string>

#include <json.hpp>

namespace gaplab {

// 17 significant digits: round-trips every double exactly.
std::string fmt_double(double v);

// Serialize with a fixed layout (2-space indent, trailing newline) so equal
// reports are equal bytes.
std::string json_dump(const nlohmann::ordered_json& j);

// Write via a temporary file in the same directory plus rename, so readers
// never observe a partial report.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace gaplab
