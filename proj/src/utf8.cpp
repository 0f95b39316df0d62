#include "kgwb/utf8.hpp"

#include "kgwb/error.hpp"

namespace kgwb::utf8 {

namespace {

std::size_t sequence_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead & 0xE0) == 0xC0 && lead >= 0xC2) return 2;
    if ((lead & 0xF0) == 0xE0) return 3;
    if ((lead & 0xF8) == 0xF0 && lead <= 0xF4) return 4;
    return 0;
}

}  // namespace

std::vector<std::size_t> code_point_offsets(std::string_view text) {
    std::vector<std::size_t> offsets;
    offsets.reserve(text.size() + 1);
    std::size_t i = 0;
    while (i < text.size()) {
        const auto len = sequence_length(static_cast<unsigned char>(text[i]));
        if (len == 0 || i + len > text.size()) {
            throw Error(ErrorCode::InvalidArgument,
                        "malformed UTF-8 at byte " + std::to_string(i));
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) {
                throw Error(ErrorCode::InvalidArgument,
                            "malformed UTF-8 at byte " + std::to_string(i + k));
            }
        }
        offsets.push_back(i);
        i += len;
    }
    offsets.push_back(text.size());
    return offsets;
}

std::size_t code_point_count(std::string_view text) {
    return code_point_offsets(text).size() - 1;
}

std::string fold_case(std::string_view text) {
    std::string out(text);
    for (auto& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

}  // namespace kgwb::utf8
