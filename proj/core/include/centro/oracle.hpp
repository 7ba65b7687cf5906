#pragma once

#include <optional>

#include "centro/integer_sos.hpp"
#include "centro/lattice.hpp"
#include "centro/matrix.hpp"

// Deliberately naive reference implementations. They share no code with the
// fast paths they check: cofactor expansion instead of elimination, explicit
// matching enumeration instead of determinants, a square scan instead of
// Gaussian-integer descent.
namespace centro::oracle {

inline constexpr std::size_t kDetGuard = 8;
inline constexpr std::size_t kMatchingGuard = 40;
inline constexpr long kTwoSquaresGuard = 1000000;

// Laplace expansion along the first row.
template <FieldScalar S>
S det_cofactor(const Matrix<S>& a) {
    if (!a.square()) throw dimension_error("determinant of non-square " + a.shape());
    if (a.rows() > kDetGuard)
        throw guard_error("cofactor oracle limited to order " + std::to_string(kDetGuard));
    const std::size_t n = a.rows();
    if (n == 1) return a.at(0, 0);
    S det = zero_like(a.exemplar());
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(a.at(0, j))) continue;
        Matrix<S> minor(n - 1, n - 1, zero_like(a.exemplar()));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t col = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, col++) = a.at(i, c);
            }
        }
        S term = a.at(0, j) * det_cofactor(minor);
        det = j % 2 == 0 ? det + term : det - term;
    }
    return det;
}

// Exact perfect-matching count by branching on the first unmatched vertex.
Integer enumerate_matchings(const LatticeGraph& g);

// Scan x downward from floor(sqrt(n)); first hit is the canonical pair.
std::optional<TwoSquares> two_squares_exhaustive(long n);

} // namespace centro::oracle
