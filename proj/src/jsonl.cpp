#include "kgwb/jsonl.hpp"

#include <sstream>

#include "kgwb/error.hpp"

namespace kgwb {

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

std::vector<JsonLine> read_json_lines(std::istream& in) {
    if (!in.good()) throw Error(ErrorCode::UnreadableInput, "input stream is not readable");
    std::vector<JsonLine> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        JsonLine entry;
        entry.ordinal = lineno;
        try {
            entry.record = Json::parse(line);
        } catch (const Json::parse_error& e) {
            entry.parse_error = std::string("malformed JSON: ") + e.what();
        }
        lines.push_back(std::move(entry));
    }
    if (in.bad()) throw Error(ErrorCode::UnreadableInput, "read error on input stream");
    return lines;
}

std::vector<JsonLine> read_json_lines(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_json_lines(in);
}

std::vector<JsonLine> json_lines_from_array(const Json& array) {
    if (!array.is_array()) throw Error(ErrorCode::InvalidArgument, "expected a JSON array of records");
    std::vector<JsonLine> lines;
    lines.reserve(array.size());
    std::size_t ordinal = 0;
    for (const auto& record : array) lines.push_back({++ordinal, std::optional<Json>(std::in_place, record), {}});
    return lines;
}

std::vector<JsonLine> json_lines_from_body(const Json& value) {
    if (value.is_null()) return {};
    if (value.is_string()) return read_json_lines(value.get_ref<const std::string&>());
    return json_lines_from_array(value);
}

}  // namespace kgwb
