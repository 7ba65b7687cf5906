#pragma once

#include <cstdint>
#include <vector>

#include "centro/matrix.hpp"

namespace centro {

// Cross-diagonal +1, -1, +1, ... starting in the upper-right corner. Works
// for any order; anti-involutory exactly when the order is even (odd order
// gives an involution instead).
template <FieldScalar S>
Matrix<S> alternating_exchange_matrix(std::size_t order, const S& exemplar) {
    if (order == 0) throw dimension_error("order must be positive");
    Matrix<S> k(order, order, zero_like(exemplar));
    for (std::size_t i = 0; i < order; ++i)
        k(i, order - 1 - i) = i % 2 == 0 ? one_like(exemplar) : -one_like(exemplar);
    return k;
}

// The even-order builder; odd orders are rejected because such a matrix would
// be involutory rather than anti-involutory.
template <FieldScalar S>
Matrix<S> build_alternating_exchange(std::size_t order, const S& exemplar) {
    if (order % 2 != 0)
        throw contract_error("alternating exchange of odd order " + std::to_string(order) +
                             " is involutory, not anti-involutory");
    return alternating_exchange_matrix(order, exemplar);
}

// Plain exchange matrix J (1's on the cross-diagonal); an involution.
template <FieldScalar S>
Matrix<S> exchange_matrix(std::size_t order, const S& exemplar) {
    if (order == 0) throw dimension_error("order must be positive");
    Matrix<S> j(order, order, zero_like(exemplar));
    for (std::size_t i = 0; i < order; ++i) j(i, order - 1 - i) = one_like(exemplar);
    return j;
}

// Entrywise characterizations: a_{i,j} = (-1)^{i+j} a_{n+1-i,n+1-j}, with an
// extra sign for the skew variant. Equivalent to commuting (anticommuting)
// with the alternating exchange matrix.
template <FieldScalar S>
bool is_alternating_centrosymmetric(const Matrix<S>& a) {
    if (!a.square()) throw dimension_error("predicate needs a square matrix");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const S& mirror = a.at(n - 1 - i, n - 1 - j);
            if (a.at(i, j) != ((i + j) % 2 == 0 ? mirror : -mirror)) return false;
        }
    return true;
}

template <FieldScalar S>
bool is_alternating_skew_centrosymmetric(const Matrix<S>& a) {
    if (!a.square()) throw dimension_error("predicate needs a square matrix");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const S& mirror = a.at(n - 1 - i, n - 1 - j);
            if (a.at(i, j) != ((i + j) % 2 == 0 ? -mirror : mirror)) return false;
        }
    return true;
}

enum class SubsetClass { S, T, Sprime, Tprime };

// A k-subset of [2k] containing exactly one of {i, 2k+1-i} for each i. The
// generator I = members below k determines the class by |I| mod 4.
struct ComplementarySubset {
    std::vector<std::size_t> members; // 0-based, strictly ascending
    std::size_t generator_size;       // |members in the first k columns|
    SubsetClass cls;
};

inline SubsetClass subset_class_of(std::size_t l) {
    switch (l % 4) {
        case 0: return SubsetClass::S;
        case 1: return SubsetClass::T;
        case 2: return SubsetClass::Sprime;
        default: return SubsetClass::Tprime;
    }
}

// All 2^k complementary subsets, one per I subset of [k]: I~ = I united with
// {2k+1-i : i in [k] \ I} (1-based; 0-based in members).
inline std::vector<ComplementarySubset> enumerate_complementary(std::size_t k) {
    if (k == 0) throw dimension_error("k must be positive");
    if (k >= 31) throw guard_error("2^k subset enumeration infeasible for k = " + std::to_string(k));
    std::vector<ComplementarySubset> out;
    out.reserve(std::size_t(1) << k);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << k); ++mask) {
        ComplementarySubset cs;
        cs.generator_size = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (std::uint32_t(1) << j)) {
                cs.members.push_back(j);
                ++cs.generator_size;
            }
        for (std::size_t j = k; j-- > 0;)
            if (!(mask & (std::uint32_t(1) << j))) cs.members.push_back(2 * k - 1 - j);
        cs.cls = subset_class_of(cs.generator_size);
        out.push_back(std::move(cs));
    }
    return out;
}

template <FieldScalar S>
struct ComplementaryDet {
    S x;
    S y;
    S det; // det A itself (the (-1)^k is already folded in for skew inputs)
};

// The 2^k-term determinant formula. Each subset term carries the coefficient
// (i * (-1)^{k+1})^{k-r} from the multilinear expansion of det(B+iC), r the
// generator size; collecting real and imaginary parts gives x + iy =
// det(B+iC) exactly, hence det A = x^2 + y^2 (times (-1)^k for skew inputs).
template <FieldScalar S>
ComplementaryDet<S> det_via_complementary(const Matrix<S>& a, bool skew, std::size_t guard_k = 16) {
    if (!a.square() || a.rows() % 2 != 0)
        throw contract_error("formula needs an even-order square matrix");
    if (skew ? !is_alternating_skew_centrosymmetric(a) : !is_alternating_centrosymmetric(a))
        throw contract_error(std::string("matrix is not alternating ") + (skew ? "skew-" : "") +
                             "centrosymmetric");
    const std::size_t k = a.rows() / 2;
    if (k > guard_k)
        throw guard_error("k = " + std::to_string(k) + " exceeds the subset-formula guard " +
                          std::to_string(guard_k));

    const S zero = zero_like(a.exemplar());
    S x = zero, y = zero;
    const bool k_odd = k % 2 == 1;
    for (const auto& cs : enumerate_complementary(k)) {
        S d = det_exact(submatrix_by_columns(a, cs.members));
        const std::size_t m = k - cs.generator_size; // power of i*(-1)^{k+1}
        switch (m % 4) {
            case 0: x = x + d; break;
            case 2: x = x - d; break;
            case 1: y = k_odd ? y + d : y - d; break;
            default: y = k_odd ? y - d : y + d; break;
        }
    }
    S sum = x * x + y * y;
    return {x, y, skew && k_odd ? -sum : sum};
}

} // namespace centro
