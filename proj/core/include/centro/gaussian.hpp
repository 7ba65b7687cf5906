#pragma once

#include <string>

#include "centro/errors.hpp"
#include "centro/prime_field.hpp"
#include "centro/rational.hpp"

namespace centro {

namespace detail {
inline void require_gaussian_base(const Rational&) {} // -1 is never a square in Q
inline void require_gaussian_base(const FpElement& a) {
    if (minus_one_is_square_mod(a.modulus()))
        throw arithmetic_error("F_" + std::to_string(a.modulus()) +
                               "[i] is not a field: -1 is a square (p == 1 mod 4)");
}
template <class F>
void require_gaussian_base(const F&) {
    // -1 = i^2 is a square in any F[i]; iterating the extension never
    // yields a field. Reachable only through generic code on Gaussian
    // scalars, which guards at runtime.
    throw arithmetic_error("-1 is already a square in this field; F[i] is not a field");
}
} // namespace detail

// F[i] for a base field F in which -1 is not a square. Elements are re + i*im.
// Construction rejects bases where x^2 + 1 splits (F_p with p == 1 mod 4).
template <class F>
class Gaussian {
public:
    Gaussian(F re, F im) : re_(std::move(re)), im_(std::move(im)) {
        detail::require_gaussian_base(re_);
    }

    explicit Gaussian(F re) : Gaussian(re, re - re) {}

    const F& real() const { return re_; }
    const F& imag() const { return im_; }

    Gaussian conjugate() const { return Gaussian(re_, -im_); }

    // re^2 + im^2 = g * conj(g), an element of the base field.
    F norm() const { return re_ * re_ + im_ * im_; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
    }
    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ * b.re_ - a.im_ * b.im_,
                        a.re_ * b.im_ + a.im_ * b.re_);
    }

    Gaussian inverse() const {
        // Since -1 is not a square, norm(g) = 0 only for g = 0.
        F n = norm();
        if (n == re_ - re_) throw arithmetic_error("division by zero in F[i]");
        return Gaussian(re_ / n, -im_ / n);
    }

    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

private:
    F re_;
    F im_;
};

using GaussianRational = Gaussian<Rational>;
using GaussianFp       = Gaussian<FpElement>;

template <class F>
Gaussian<F> gaussian_conjugate(const Gaussian<F>& g) { return g.conjugate(); }

template <class F>
F gaussian_norm(const Gaussian<F>& g) { return g.norm(); }

template <class F>
std::string to_string(const Gaussian<F>& g) {
    using centro::to_string;
    F zero = g.real() - g.real();
    if (g.imag() == zero) return to_string(g.real());
    std::string s = to_string(g.real());
    std::string im = to_string(g.imag());
    if (!im.empty() && im[0] == '-') return s + im + "i";
    return s + "+" + im + "i";
}

} // namespace centro
