#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "centro/errors.hpp"
#include "centro/primality.hpp"

namespace centro {

// An element of F_p for an odd prime p. Values are kept reduced into [0, p).
// Every binary operation checks that both operands live in the same field.
//
// Characteristic 2 is excluded throughout. Any odd prime is a valid modulus
// for plain arithmetic; the Gaussian extension F_p[i] additionally requires
// p == 3 (mod 4) so that -1 is a non-square (see gaussian.hpp).
class FpElement {
public:
    FpElement() : v_(0), p_(0) {}

    FpElement(std::int64_t value, std::int64_t p) : p_(p) {
        check_modulus(p);
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    static void check_modulus(std::int64_t p) {
        if (p == 2) throw arithmetic_error("characteristic 2 fields are not supported");
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw arithmetic_error("modulus " + std::to_string(p) + " is not prime");
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    friend FpElement operator+(const FpElement& a, const FpElement& b) {
        a.same_field(b);
        std::int64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return FpElement::raw(s, a.p_);
    }

    friend FpElement operator-(const FpElement& a, const FpElement& b) {
        a.same_field(b);
        std::int64_t s = a.v_ - b.v_;
        if (s < 0) s += a.p_;
        return FpElement::raw(s, a.p_);
    }

    FpElement operator-() const {
        return FpElement::raw(v_ == 0 ? 0 : p_ - v_, p_);
    }

    friend FpElement operator*(const FpElement& a, const FpElement& b) {
        a.same_field(b);
        auto prod = static_cast<__int128>(a.v_) * b.v_;
        return FpElement::raw(static_cast<std::int64_t>(prod % a.p_), a.p_);
    }

    FpElement inverse() const {
        if (v_ == 0) throw arithmetic_error("division by zero in F_" + std::to_string(p_));
        // Fermat: v^(p-2)
        return pow(p_ - 2);
    }

    friend FpElement operator/(const FpElement& a, const FpElement& b) {
        a.same_field(b);
        return a * b.inverse();
    }

    FpElement pow(std::int64_t e) const {
        std::int64_t base = v_, result = 1;
        std::int64_t exp = e;
        while (exp > 0) {
            if (exp & 1) result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % p_);
            base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p_);
            exp >>= 1;
        }
        return FpElement::raw(result, p_);
    }

    friend bool operator==(const FpElement& a, const FpElement& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FpElement& a, const FpElement& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static FpElement raw(std::int64_t v, std::int64_t p) {
        FpElement e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }

    void same_field(const FpElement& other) const {
        if (p_ != other.p_)
            throw arithmetic_error("mixed moduli " + std::to_string(p_) + " and " + std::to_string(other.p_));
    }

    std::int64_t v_;
    std::int64_t p_;
};

// -1 is a square in F_p iff p == 1 (mod 4); it is never a square in Q.
inline bool minus_one_is_square_mod(std::int64_t p) {
    FpElement::check_modulus(p);
    return p % 4 == 1;
}

inline FpElement parse_fp(std::string_view text, std::int64_t p, std::size_t line = 0) {
    try {
        return FpElement(std::stoll(std::string(text)), p);
    } catch (const arithmetic_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("malformed F_p scalar '" + std::string(text) + "'", line);
    }
}

inline std::string to_string(const FpElement& a) { return a.str(); }

} // namespace centro
