#include "ginfer/text.hpp"

#include <algorithm>

namespace ginfer {

namespace {

struct CaseFoldEntry {
    char32_t from;
    char32_t to;
};

#include "casefold_table.inc"

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point at s[i..]; advances i past it. Returns nullopt
// on an ill-formed sequence, advancing i past the offending byte(s) per
// the W3C/WHATWG "maximal subpart" policy (consume the longest prefix
// of a valid sequence, at least one byte).
std::optional<char32_t> decode_one(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    char32_t cp;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
        min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
        min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
        min = 0x10000;
    } else {
        ++i;  // stray continuation or invalid lead byte
        return std::nullopt;
    }
    std::size_t j = i + 1;
    for (; j < i + static_cast<std::size_t>(len); ++j) {
        if (j >= s.size() || (static_cast<unsigned char>(s[j]) & 0xC0) != 0x80) {
            i = j;
            return std::nullopt;
        }
        cp = (cp << 6) | (static_cast<unsigned char>(s[j]) & 0x3F);
    }
    i = j;
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
        return std::nullopt;
    return cp;
}

}  // namespace

namespace utf8 {

std::u32string decode_lossy(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        auto cp = decode_one(s, i);
        out.push_back(cp.value_or(kReplacement));
    }
    return out;
}

std::optional<std::u32string> decode_strict(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        auto cp = decode_one(s, i);
        if (!cp)
            return std::nullopt;
        out.push_back(*cp);
    }
    return out;
}

std::string encode(std::u32string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

bool is_valid(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        if (!decode_one(s, i))
            return false;
    }
    return true;
}

}  // namespace utf8

char32_t fold_code_point(char32_t cp) {
    if (cp < 0x80)
        return (cp >= U'A' && cp <= U'Z') ? cp + 0x20 : cp;
    const auto* end = kCaseFoldTable + std::size(kCaseFoldTable);
    const auto* it = std::lower_bound(kCaseFoldTable, end, cp,
                                      [](const CaseFoldEntry& e, char32_t c) { return e.from < c; });
    return (it != end && it->from == cp) ? it->to : cp;
}

bool is_white_space(char32_t cp) {
    switch (cp) {
        case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
        case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
        case 0x2000: case 0x2001: case 0x2002: case 0x2003: case 0x2004:
        case 0x2005: case 0x2006: case 0x2007: case 0x2008: case 0x2009:
        case 0x200A: case 0x2028: case 0x2029: case 0x202F: case 0x205F:
        case 0x3000:
            return true;
        default:
            return false;
    }
}

std::u32string normalize_to_u32(std::string_view raw) {
    std::u32string cps = utf8::decode_lossy(raw);
    std::size_t begin = 0;
    std::size_t end = cps.size();
    while (begin < end && is_white_space(cps[begin]))
        ++begin;
    while (end > begin && is_white_space(cps[end - 1]))
        --end;
    std::u32string out;
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i)
        out.push_back(fold_code_point(cps[i]));
    return out;
}

std::string normalize_text(std::string_view raw) {
    return utf8::encode(normalize_to_u32(raw));
}

std::string slice_by_code_point(std::string_view normalized, std::size_t pos, std::size_t end) {
    std::u32string cps = utf8::decode_lossy(normalized);
    if (pos > cps.size())
        pos = cps.size();
    if (end > cps.size())
        end = cps.size();
    if (pos >= end)
        return {};
    return utf8::encode(std::u32string_view(cps).substr(pos, end - pos));
}

}  // namespace ginfer
