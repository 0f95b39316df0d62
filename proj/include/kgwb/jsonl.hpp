#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgwb/value.hpp"

namespace kgwb {

// One non-blank line of a JSON-lines stream. `ordinal` is the 1-based line
// number; exactly one of `record` / `parse_error` is meaningful.
struct JsonLine {
    std::size_t ordinal = 0;
    std::optional<Json> record;
    std::string parse_error;
};

// Throws Error(UnreadableInput) when the stream itself cannot be read.
std::vector<JsonLine> read_json_lines(std::istream& in);
std::vector<JsonLine> read_json_lines(std::string_view text);

// Wraps already-parsed records; ordinals are 1-based array positions.
std::vector<JsonLine> json_lines_from_array(const Json& array);

// Accepts either a JSON array of records or a string holding JSON-lines.
std::vector<JsonLine> json_lines_from_body(const Json& value);

}  // namespace kgwb
