#pragma once

#include <compare>
#include <string>

namespace synex {

// A term is a surface form tagged with a language code. Equality is byte
// exact; no case folding and no Unicode normalization happens here.
struct Term {
    std::string surface;
    std::string lang;

    friend bool operator==(const Term&, const Term&) = default;

    // Ordered by (lang, surface) so multilingual listings group by language.
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
        if (auto c = a.lang <=> b.lang; c != 0) return c;
        return a.surface <=> b.surface;
    }
};

inline std::string to_string(const Term& t) { return t.lang + ":" + t.surface; }

} // namespace synex
