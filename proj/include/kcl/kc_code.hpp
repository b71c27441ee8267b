#pragma once

#include <string>
#include <string_view>

#include "kcl/errors.hpp"
#include "kcl/io.hpp"

namespace kcl {

// A parsed CCSS math knowledge-component code, e.g. "7.NS.A.1":
// grade 7, domain NS (Number System), standard A.1.
//
// Grades run K, 1..12; high-school codes use a band token instead of a
// number (e.g. "HSA" or "HSA-SSE"). No ordering is defined between bands.
struct KcCode {
    std::string grade;
    std::string domain;
    std::string standard;

    friend bool operator==(const KcCode&, const KcCode&) = default;
};

namespace detail {

inline bool all_upper_alpha(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < 'A' || c > 'Z') return false;
    }
    return true;
}

inline bool valid_grade_token(std::string_view g) {
    if (g == "K") return true;
    // Numeric grades 1..12, canonical form only (no leading zeros).
    if (!g.empty() && g[0] >= '1' && g[0] <= '9') {
        int value = 0;
        for (char c : g) {
            if (c < '0' || c > '9') { value = -1; break; }
            value = value * 10 + (c - '0');
        }
        return value >= 1 && value <= 12;
    }
    // High-school band token: "HS" plus uppercase letters, optionally
    // hyphenated once ("HSA", "HSN", "HSA-SSE").
    if (g.size() >= 3 && g.substr(0, 2) == "HS") {
        const auto dash = g.find('-');
        if (dash == std::string_view::npos) return all_upper_alpha(g);
        return dash > 2 && dash + 1 < g.size() &&
               all_upper_alpha(g.substr(0, dash)) &&
               all_upper_alpha(g.substr(dash + 1));
    }
    return false;
}

inline bool valid_standard_segment(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
        if (!ok) return false;
    }
    return true;
}

} // namespace detail

inline KcCode parse_kc_code(std::string_view raw) {
    const std::string s = trim(raw);
    const auto segments = split(s, '.');
    if (segments.size() < 3) {
        throw MalformedCode("KC code needs at least grade.domain.standard: \"" + s + "\"");
    }
    KcCode code;
    code.grade = segments[0];
    if (!detail::valid_grade_token(code.grade)) {
        throw MalformedCode("bad grade token \"" + code.grade + "\" in \"" + s + "\"");
    }
    code.domain = segments[1];
    if (!detail::all_upper_alpha(code.domain)) {
        throw MalformedCode("domain must be nonempty uppercase letters in \"" + s + "\"");
    }
    for (size_t i = 2; i < segments.size(); ++i) {
        if (!detail::valid_standard_segment(segments[i])) {
            throw MalformedCode("bad standard segment \"" + segments[i] + "\" in \"" + s + "\"");
        }
        if (i > 2) code.standard += '.';
        code.standard += segments[i];
    }
    return code;
}

inline std::string format_kc_code(const KcCode& code) {
    return code.grade + "." + code.domain + "." + code.standard;
}

// Canonical string form: parses and re-formats (trims whitespace, validates).
inline std::string canonical_kc_code(std::string_view raw) {
    return format_kc_code(parse_kc_code(raw));
}

inline bool is_valid_kc_code(std::string_view raw) {
    try {
        parse_kc_code(raw);
        return true;
    } catch (const MalformedCode&) {
        return false;
    }
}

} // namespace kcl
