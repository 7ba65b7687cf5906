#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "centro/gaussian.hpp"
#include "centro/matrix.hpp"

namespace centro {

// A parsed matrix file. The header names Q or Fp:<p>; Gaussian entries in
// the body lift the matrix into the corresponding extension.
using ParsedMatrix = std::variant<Matrix<Rational>, Matrix<FpElement>, Matrix<GaussianRational>,
                                  Matrix<GaussianFp>>;

// Scalar grammar: `-12`, `p/q`, and Gaussian `a+bi` / `a-bi` (also `bi`, `i`,
// `-i`, `3+i`); prime-field entries are integers reduced mod p.
GaussianRational parse_gaussian_rational(const std::string& token, std::size_t line = 0);
GaussianFp parse_gaussian_fp(const std::string& token, std::int64_t p, std::size_t line = 0);

// Format: line 1 `rows cols [field]` with field `Q` (default) or `Fp:<p>`;
// then rows * cols whitespace-separated scalars.
ParsedMatrix parse_matrix(std::istream& in);
ParsedMatrix parse_matrix(const std::string& text);
ParsedMatrix parse_matrix_file(const std::string& path);

std::string print_matrix(const ParsedMatrix& m);

template <FieldScalar S>
std::string print_matrix_body(const Matrix<S>& m) {
    using centro::to_string;
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += " ";
            out += to_string(m.at(i, j));
        }
        out += "\n";
    }
    return out;
}

} // namespace centro
