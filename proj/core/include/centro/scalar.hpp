#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "centro/gaussian.hpp"
#include "centro/prime_field.hpp"
#include "centro/rational.hpp"

namespace centro {

// Field constants are minted from an exemplar value so that runtime-modulus
// scalars (F_p) carry their field along. Rational is a fixed field; the
// exemplar is ignored there.

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int(const Rational&, std::int64_t n) { return Rational(n); }

inline FpElement zero_like(const FpElement& a) { return FpElement(0, a.modulus()); }
inline FpElement one_like(const FpElement& a) { return FpElement(1, a.modulus()); }
inline FpElement from_int(const FpElement& a, std::int64_t n) { return FpElement(n, a.modulus()); }

template <class F>
Gaussian<F> zero_like(const Gaussian<F>& g) {
    return Gaussian<F>(zero_like(g.real()), zero_like(g.real()));
}
template <class F>
Gaussian<F> one_like(const Gaussian<F>& g) {
    return Gaussian<F>(one_like(g.real()), zero_like(g.real()));
}
template <class F>
Gaussian<F> from_int(const Gaussian<F>& g, std::int64_t n) {
    return Gaussian<F>(from_int(g.real(), n), zero_like(g.real()));
}

template <class S>
bool is_zero(const S& a) { return a == zero_like(a); }

// Checked division surface: library code always errors on zero divisors
// instead of relying on whatever the underlying type would do.
template <class S>
S invert(const S& a) {
    if (is_zero(a)) throw arithmetic_error("zero has no inverse");
    return one_like(a) / a;
}

template <class S>
S checked_div(const S& a, const S& b) {
    if (is_zero(b)) throw arithmetic_error("division by zero");
    return a / b;
}

inline bool minus_one_is_square_in(const Rational&) { return false; }
inline bool minus_one_is_square_in(const FpElement& a) { return minus_one_is_square_mod(a.modulus()); }
template <class F>
bool minus_one_is_square_in(const Gaussian<F>&) { return true; } // i^2 = -1

inline std::string field_name(const Rational&) { return "Q"; }
inline std::string field_name(const FpElement& a) { return "F" + std::to_string(a.modulus()); }
template <class F>
std::string field_name(const Gaussian<F>& g) { return field_name(g.real()) + "[i]"; }

template <class S>
concept FieldScalar = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<S>;
    { one_like(a) } -> std::convertible_to<S>;
};

} // namespace centro
