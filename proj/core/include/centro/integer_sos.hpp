#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "centro/errors.hpp"
#include "centro/rational.hpp"

namespace centro {

// Witness that x^2 + y^2 = n with the canonical order x >= y >= 0.
struct TwoSquares {
    Integer x;
    Integer y;
    Integer n;

    TwoSquares(Integer x_, Integer y_, Integer n_) : x(std::move(x_)), y(std::move(y_)), n(std::move(n_)) {
        if (x < 0 || y < 0 || x < y || x * x + y * y != n)
            throw arithmetic_error("invalid two-squares witness");
    }

    friend bool operator==(const TwoSquares& a, const TwoSquares& b) {
        return a.x == b.x && a.y == b.y && a.n == b.n;
    }
};

struct PrimePower {
    Integer prime;
    unsigned exponent;
};

// Trial division up to 10^6, then Pollard rho with Miller-Rabin primality.
// Factors are returned sorted by prime.
std::vector<PrimePower> factorize(const Integer& n);

// n >= 0 is a sum of two integral squares iff every prime == 3 (mod 4) in its
// factorization occurs to an even power. Returns the first offending prime
// power, or nothing when n is representable.
std::optional<PrimePower> sum_of_two_squares_obstruction(const Integer& n);

inline bool is_sum_of_two_squares(const Integer& n) {
    return !sum_of_two_squares_obstruction(n).has_value();
}

// Explicit decomposition via sqrt(-1) extraction mod each p == 1 (mod 4),
// Hermite-Serret descent, and Gaussian-norm multiplication. When several
// essentially different representations exist, the lexicographically largest
// canonical pair is returned (25 -> (5, 0), not (4, 3)).
TwoSquares decompose_two_squares(const Integer& n);

// All canonical representations, sorted lexicographically descending.
std::vector<TwoSquares> enumerate_two_squares(const Integer& n);

} // namespace centro
