#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace serre {

// Exact scalar used everywhere in the system.  Stored in lowest terms with
// positive denominator (mpq canonical form); no rounding anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Prints as "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q"; rejects q == 0 and garbage.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::string t = s;
    // mpq accepts leading '+' poorly in some versions; strip it.
    if (t[0] == '+') t = t.substr(1);
    if (t.empty()) return std::nullopt;
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && i == 0)))
            return std::nullopt;
    }
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        if (slash == 0 || slash + 1 == t.size()) return std::nullopt;
        if (t.find('/', slash + 1) != std::string::npos) return std::nullopt;
        std::string den = t.substr(slash + 1);
        if (mpz_class(den) == 0) return std::nullopt;
    }
    Rational r;
    if (r.set_str(t, 10) != 0) return std::nullopt;
    r.canonicalize();
    return r;
}

}  // namespace serre
