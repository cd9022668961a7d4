#ifndef GINFER_TEXT_HPP
#define GINFER_TEXT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ginfer {

namespace utf8 {

// Decodes UTF-8, replacing each ill-formed sequence with U+FFFD.
std::u32string decode_lossy(std::string_view s);

// Decodes UTF-8; nullopt if the input contains any ill-formed sequence
// (overlong encodings, surrogates and out-of-range values included).
std::optional<std::u32string> decode_strict(std::string_view s);

std::string encode(std::u32string_view s);

bool is_valid(std::string_view s);

}  // namespace utf8

// Simple single-code-point case folding. Multi-code-point expansions
// (full folding of ß and the like) are not applied, so folding never
// changes string length. Idempotent.
char32_t fold_code_point(char32_t cp);

// Unicode White_Space.
bool is_white_space(char32_t cp);

// Canonical text form used everywhere terms and usernames meet:
// leading/trailing whitespace stripped, every code point case-folded.
// Digits and punctuation pass through. Idempotent. Ill-formed input
// bytes become U+FFFD.
std::u32string normalize_to_u32(std::string_view raw);
std::string normalize_text(std::string_view raw);

// [pos, end) slice of `normalized` counted in code points.
std::string slice_by_code_point(std::string_view normalized, std::size_t pos, std::size_t end);

}  // namespace ginfer

#endif  // GINFER_TEXT_HPP
