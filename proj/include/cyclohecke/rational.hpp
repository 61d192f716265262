#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cyclohecke {

/// Exact rational scalar. All arithmetic in the library is over Q; no
/// floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a" or "a/b" with optional leading '-'. Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string t = s;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    auto slash = t.find('/');
    std::string num = slash == std::string::npos ? t : t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (num.empty() || den.empty() ||
        num.find_first_not_of("0123456789") != std::string::npos ||
        den.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed rational literal: " + s);
    mpz_class n(num, 10), d(den, 10);  // explicit base: no octal surprises
    if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    Rat r{n, d};
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

/// Canonical text form "a" or "a/b" (denominator omitted when 1).
inline std::string to_string(const Rat& r) {
    return r.get_str();
}

inline bool is_integer(const Rat& r) {
    return r.get_den() == 1;
}

}  // namespace cyclohecke
