#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "centro/errors.hpp"

namespace centro {

// Arbitrary-precision integer and rational scalars. The rational backend
// keeps the canonical form invariants (denominator > 0, gcd(|num|, den) = 1)
// on every operation; the helpers below add the project's text syntax on
// top. Expression templates are off so that every operator returns a plain
// value, which generic matrix code relies on.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline Integer integer_value(const Rational& q) {
    if (!is_integral(q)) throw arithmetic_error("rational " + q.str() + " is not an integer");
    return numerator_of(q);
}

inline Integer abs_int(const Integer& n) { return n < 0 ? Integer(-n) : n; }

// Text syntax: `-12` or `p/q`. Reduced form is produced regardless of input.
inline Rational parse_rational(std::string_view text, std::size_t line = 0) {
    if (text.empty()) throw parse_error("empty scalar", line);
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'", line);
        return Rational(num) / Rational(den); // division canonicalizes sign and gcd
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("malformed rational '" + std::string(text) + "'", line);
    }
}

// Canonical form: integers print without the denominator.
inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

} // namespace centro
