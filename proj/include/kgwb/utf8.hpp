#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kgwb::utf8 {

// Byte offset of every code point in `text`, followed by text.size().
// Result size is code_point_count + 1. Throws Error(InvalidArgument) on
// malformed UTF-8.
std::vector<std::size_t> code_point_offsets(std::string_view text);

std::size_t code_point_count(std::string_view text);

// ASCII-only case folding. Non-ASCII bytes pass through unchanged.
std::string fold_case(std::string_view text);

}  // namespace kgwb::utf8
