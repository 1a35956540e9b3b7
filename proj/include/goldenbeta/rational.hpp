#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "goldenbeta/errors.hpp"

namespace goldenbeta {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Canonical "num/den" text, denominator always written (also for integers).
inline std::string rational_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace detail

/// Parses "a", "a/b" or a plain decimal "d.ddd" (optionally signed) into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den))
            throw ValidationError("malformed rational: '" + std::string(text) + "'");
        Integer d(std::string{den});
        if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        value = Rational(Integer(std::string{num}), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw ValidationError("malformed decimal: '" + std::string(text) + "'");
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        Integer w = whole.empty() ? Integer(0) : Integer(std::string{whole});
        Integer f = frac.empty() ? Integer(0) : Integer(std::string{frac});
        value = Rational(w * scale + f, scale);
    } else {
        if (!detail::all_digits(s))
            throw ValidationError("malformed rational: '" + std::string(text) + "'");
        value = Rational(Integer(std::string{s}));
    }
    return negative ? Rational(-value) : value;
}

/// Bit length of the larger of numerator and denominator magnitudes.
inline std::size_t rational_bits(const Rational& r) {
    const Integer& n = boost::multiprecision::numerator(r);
    const Integer& d = boost::multiprecision::denominator(r);
    std::size_t nb = n == 0 ? 0 : boost::multiprecision::msb(abs(n)) + 1;
    std::size_t db = boost::multiprecision::msb(d) + 1;
    return nb > db ? nb : db;
}

} // namespace goldenbeta
