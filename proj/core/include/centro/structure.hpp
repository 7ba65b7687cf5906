#pragma once

#include <optional>
#include <string>
#include <vector>

#include "centro/alt_centro.hpp"
#include "centro/gaussian.hpp"
#include "centro/integer_sos.hpp"
#include "centro/matrix.hpp"

namespace centro {

enum class CommutationKind { PseudoCentro, PseudoSkew, Both, Neither };

inline std::string to_string(CommutationKind k) {
    switch (k) {
        case CommutationKind::PseudoCentro: return "pseudo-centrosymmetric";
        case CommutationKind::PseudoSkew: return "pseudo-skew-centrosymmetric";
        case CommutationKind::Both: return "both";
        default: return "neither";
    }
}

template <FieldScalar S>
bool is_involutory(const Matrix<S>& k) {
    if (!k.square()) throw dimension_error("predicate needs a square matrix");
    return k * k == Matrix<S>::identity(k.rows(), k.exemplar());
}

template <FieldScalar S>
bool is_anti_involutory(const Matrix<S>& k) {
    if (!k.square()) throw dimension_error("predicate needs a square matrix");
    return k * k == -Matrix<S>::identity(k.rows(), k.exemplar());
}

// K with K^2 = -I, checked at construction. Over a field where -1 is not a
// square such a K exists only in even order, so odd orders are rejected
// outright.
template <FieldScalar S>
class AntiInvolution {
public:
    explicit AntiInvolution(Matrix<S> k) : k_(std::move(k)) {
        if (!k_.square()) throw dimension_error("K must be square");
        if (k_.rows() % 2 != 0)
            throw contract_error("anti-involutory matrices have even order; got " +
                                 std::to_string(k_.rows()));
        if (!is_anti_involutory(k_)) throw contract_error("K^2 != -I");
    }

    const Matrix<S>& matrix() const { return k_; }
    std::size_t order() const { return k_.rows(); }
    std::size_t half_order() const { return k_.rows() / 2; }

private:
    Matrix<S> k_;
};

// K = [[0, K2], [-K2^-1, 0]] for invertible K2 (Eq.-(1) shape); K3 = -K2^-1
// is forced by anti-involutivity.
template <FieldScalar S>
class SimpleFormK {
public:
    explicit SimpleFormK(Matrix<S> k2) : k2_(std::move(k2)), k2_inv_(mat_inverse(k2_)) {
        if (!k2_.square()) throw dimension_error("K2 must be square");
    }

    const Matrix<S>& k2() const { return k2_; }
    const Matrix<S>& k2_inverse() const { return k2_inv_; }
    std::size_t half_order() const { return k2_.rows(); }

    Matrix<S> assembled() const {
        const std::size_t k = half_order();
        Matrix<S> m(2 * k, 2 * k, zero_like(k2_.exemplar()));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                m(i, k + j) = k2_.at(i, j);
                m(k + i, j) = -k2_inv_.at(i, j);
            }
        return m;
    }

    AntiInvolution<S> as_anti_involution() const { return AntiInvolution<S>(assembled()); }

private:
    Matrix<S> k2_;
    Matrix<S> k2_inv_;
};

// K' = [[0, -I], [I, 0]]: the simple form with K2 = -I, the target of the
// basis construction.
template <FieldScalar S>
Matrix<S> canonical_k_prime(std::size_t k, const S& exemplar) {
    Matrix<S> m(2 * k, 2 * k, zero_like(exemplar));
    for (std::size_t i = 0; i < k; ++i) {
        m(i, k + i) = -one_like(exemplar);
        m(k + i, i) = one_like(exemplar);
    }
    return m;
}

template <FieldScalar S>
CommutationKind classify_commutation(const Matrix<S>& a, const AntiInvolution<S>& k) {
    if (!a.square() || a.rows() != k.order())
        throw dimension_error("A and K must be square of the same order");
    Matrix<S> ka = k.matrix() * a;
    Matrix<S> ak = a * k.matrix();
    bool centro = ka == ak;
    bool skew = ka == -ak;
    if (centro && skew) return CommutationKind::Both; // forces KA = 0, i.e. A = 0
    if (centro) return CommutationKind::PseudoCentro;
    if (skew) return CommutationKind::PseudoSkew;
    return CommutationKind::Neither;
}

// det A = sign * (x^2 + y^2) with x + iy = det(B + iC); sign is +1 for the
// pseudo-centrosymmetric case and (-1)^k for the pseudo-skew case.
template <FieldScalar S>
struct SosCertificate {
    S x;
    S y;
    int sign; // +1 or -1
    S claimed_det;
};

template <FieldScalar S>
struct HalfDetResult {
    S det;
    SosCertificate<S> certificate;
};

// Splits a pseudo-(skew-)centrosymmetric A into (B, C) with B = A1 and
// C = A2 * K2^-1, verifying the block relations forced by the commutation:
//   centro: A = [[B, C K2], [-K2^-1 C, K2^-1 B K2]]
//   skew:   A = [[B, C K2], [ K2^-1 C, -K2^-1 B K2]]
template <FieldScalar S>
std::pair<Matrix<S>, Matrix<S>> extract_bc(const Matrix<S>& a, const SimpleFormK<S>& k,
                                           CommutationKind kind = CommutationKind::PseudoCentro) {
    if (kind != CommutationKind::PseudoCentro && kind != CommutationKind::PseudoSkew &&
        kind != CommutationKind::Both)
        throw contract_error("extract_bc needs a pseudo-centro or pseudo-skew matrix");
    const bool skew = kind == CommutationKind::PseudoSkew;
    const std::size_t half = k.half_order();
    if (!a.square() || a.rows() != 2 * half)
        throw dimension_error("A must be square of order " + std::to_string(2 * half));

    Matrix<S> b = block(a, 0, half, 0, half);
    Matrix<S> a2 = block(a, 0, half, half, 2 * half);
    Matrix<S> a3 = block(a, half, 2 * half, 0, half);
    Matrix<S> a4 = block(a, half, 2 * half, half, 2 * half);
    Matrix<S> c = a2 * k.k2_inverse();

    Matrix<S> expect_a3 = skew ? k.k2_inverse() * c : -(k.k2_inverse() * c);
    Matrix<S> expect_a4 = skew ? -(k.k2_inverse() * b * k.k2()) : k.k2_inverse() * b * k.k2();
    const char* variant = skew ? "pseudo-skew-centrosymmetric" : "pseudo-centrosymmetric";
    if (a3 != expect_a3)
        throw contract_error(std::string("not ") + variant + " w.r.t. this K: A3 != " +
                             (skew ? "" : "-") + "K2^-1 A2 K2^-1");
    if (a4 != expect_a4)
        throw contract_error(std::string("not ") + variant + " w.r.t. this K: A4 != " +
                             (skew ? "-" : "") + "K2^-1 A1 K2");
    return {std::move(b), std::move(c)};
}

// det A = det(B+iC) det(B-iC) computed as one half-size determinant over
// F[i]; requires -1 to be a non-square in the base field.
template <FieldScalar S>
HalfDetResult<S> det_via_half(const Matrix<S>& b, const Matrix<S>& c, CommutationKind kind) {
    if (!b.square() || !c.square() || b.rows() != c.rows())
        throw dimension_error("B and C must be square of equal order");
    if (kind == CommutationKind::Neither)
        throw contract_error("no half-size determinant for the 'neither' class");
    if (minus_one_is_square_in(b.exemplar()))
        throw contract_error("-1 is a square in " + field_name(b.exemplar()) +
                             "; F[i] is not a field");
    const std::size_t k = b.rows();

    Matrix<Gaussian<S>> m(k, k, Gaussian<S>(zero_like(b.exemplar()), zero_like(b.exemplar())));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = Gaussian<S>(b.at(i, j), c.at(i, j));
    Gaussian<S> z = det_exact(m);

    const int sign = kind == CommutationKind::PseudoSkew && k % 2 == 1 ? -1 : 1;
    S sum = z.norm();
    S det = sign == 1 ? sum : -sum;
    return {det, SosCertificate<S>{z.real(), z.imag(), sign, det}};
}

// Lemma basis construction: V = [v1|..|vk|Kv1|..|Kvk] with K V = V K'.
// Candidates are standard basis vectors scanned in index order; independence
// is decided by rank (echelon) rather than orthogonal projection, which
// stays valid over F_p where the bilinear form can degenerate.
template <FieldScalar S>
Matrix<S> build_basis(const AntiInvolution<S>& k) {
    const S ex = k.matrix().exemplar();
    if (minus_one_is_square_in(ex))
        throw contract_error("-1 is a square in " + field_name(ex) + "; basis lemma unavailable");
    const std::size_t n = k.order();
    const std::size_t half = k.half_order();

    std::vector<std::vector<S>> echelon; // reduced independent rows, with pivot index
    std::vector<std::size_t> pivots;

    auto reduce = [&](std::vector<S> v) {
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const S& lead = v[pivots[r]];
            if (is_zero(lead)) continue;
            const S factor = lead; // echelon rows are pivot-normalized
            for (std::size_t j = 0; j < n; ++j) v[j] = v[j] - factor * echelon[r][j];
        }
        return v;
    };

    auto insert = [&](const std::vector<S>& v) -> bool {
        std::vector<S> w = reduce(v);
        std::size_t p = 0;
        while (p < n && is_zero(w[p])) ++p;
        if (p == n) return false;
        const S lead = w[p];
        for (auto& x : w) x = checked_div(x, lead);
        echelon.push_back(std::move(w));
        pivots.push_back(p);
        return true;
    };

    auto apply_k = [&](const std::vector<S>& v) {
        std::vector<S> w(n, zero_like(ex));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(k.matrix().at(i, j))) w[i] = w[i] + k.matrix().at(i, j) * v[j];
        return w;
    };

    std::vector<std::vector<S>> vs;
    for (std::size_t t = 0; t < n && vs.size() < half; ++t) {
        std::vector<S> e(n, zero_like(ex));
        e[t] = one_like(ex);
        std::vector<S> reduced = reduce(e);
        bool independent = false;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(reduced[j])) { independent = true; break; }
        if (!independent) continue;
        if (!insert(e)) continue;
        std::vector<S> ke = apply_k(e);
        if (!insert(ke))
            throw arithmetic_error("basis lemma violated: Kv dependent on prior span");
        vs.push_back(std::move(e));
    }
    if (vs.size() != half) throw arithmetic_error("basis construction did not complete");

    Matrix<S> v(n, n, zero_like(ex));
    for (std::size_t col = 0; col < half; ++col) {
        std::vector<S> kv = apply_k(vs[col]);
        for (std::size_t i = 0; i < n; ++i) {
            v(i, col) = vs[col][i];
            v(i, half + col) = kv[i];
        }
    }
    return v;
}

// General-K certificate: conjugate A into the simple-form world via the basis
// lemma, then apply the half-size determinant.
template <FieldScalar S>
SosCertificate<S> sos_certificate_general(const Matrix<S>& a, const AntiInvolution<S>& k,
                                          CommutationKind kind) {
    if (kind == CommutationKind::Neither)
        throw contract_error("A neither commutes nor anticommutes with K");
    if (a.rows() != k.order() || !a.square())
        throw dimension_error("A and K must be square of the same order");

    Matrix<S> v = build_basis(k);
    Matrix<S> conj = conjugate_by(a, v);
    const std::size_t half = k.half_order();
    SimpleFormK<S> simple(-Matrix<S>::identity(half, a.exemplar())); // K2 = -I
    CommutationKind eff = kind == CommutationKind::Both ? CommutationKind::PseudoCentro : kind;
    auto [b, c] = extract_bc(conj, simple, eff);
    return det_via_half(b, c, eff).certificate;
}

// Corollary: integer A, rational K => |det A| is a sum of two integral
// squares. Uses the rational certificate when it is already integral and
// falls back to the number-theoretic decomposition otherwise.
inline TwoSquares integral_certificate(const Matrix<Rational>& a, const AntiInvolution<Rational>& k,
                                       CommutationKind kind) {
    if (!is_integral_matrix(a)) throw contract_error("A must have integer entries");
    SosCertificate<Rational> cert = sos_certificate_general(a, k, kind);
    Integer det = integer_value(cert.claimed_det);
    Integer target = abs_int(det);
    if (is_integral(cert.x) && is_integral(cert.y)) {
        Integer x = abs_int(integer_value(cert.x));
        Integer y = abs_int(integer_value(cert.y));
        if (x < y) std::swap(x, y);
        return TwoSquares(x, y, target);
    }
    return decompose_two_squares(target);
}

namespace detail {

// Backtracking existence test: can rows and columns be reordered to make the
// matrix alternating (skew-)centrosymmetric? Positions are filled in the
// pair order (0, n-1), (1, n-2), ... alternating between rows and columns;
// every fully determined mirror constraint is checked on the way down.
template <FieldScalar S>
class ReorderSearch {
public:
    ReorderSearch(const Matrix<S>& a, bool skew)
        : a_(a), n_(a.rows()), skew_(skew), total_(4 * ((n_ + 1) / 2)), row_of_(n_, npos),
          col_of_(n_, npos), row_used_(n_, false), col_used_(n_, false) {}

    bool exists() { return assign(0); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Slot order: row pair (g, n-1-g), then column pair (g, n-1-g), for
    // g = 0, 1, ... For odd n the middle position is visited twice and the
    // second visit is a no-op.
    bool assign(std::size_t slot) {
        if (slot == total_) return true;
        const std::size_t group = slot / 4;
        const bool is_row = slot % 4 < 2;
        const std::size_t pos = slot % 2 == 0 ? group : n_ - 1 - group;
        auto& of = is_row ? row_of_ : col_of_;
        auto& used = is_row ? row_used_ : col_used_;
        if (of[pos] != npos) return assign(slot + 1);
        for (std::size_t cand = 0; cand < n_; ++cand) {
            if (used[cand]) continue;
            of[pos] = cand;
            used[cand] = true;
            if (consistent(pos, is_row) && assign(slot + 1)) return true;
            of[pos] = npos;
            used[cand] = false;
        }
        return false;
    }

    // Check all mirror constraints involving the freshly assigned position.
    bool consistent(std::size_t pos, bool is_row) const {
        if (is_row) {
            const std::size_t mi = n_ - 1 - pos;
            if (row_of_[mi] == npos) return true;
            for (std::size_t j = 0; j < n_; ++j) {
                const std::size_t mj = n_ - 1 - j;
                if (col_of_[j] == npos || col_of_[mj] == npos) continue;
                if (!entry_ok(pos, j)) return false;
            }
            return true;
        }
        const std::size_t mj = n_ - 1 - pos;
        if (col_of_[mj] == npos) return true;
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t mi = n_ - 1 - i;
            if (row_of_[i] == npos || row_of_[mi] == npos) continue;
            if (!entry_ok(i, pos)) return false;
        }
        return true;
    }

    bool entry_ok(std::size_t i, std::size_t j) const {
        const S& lhs = a_.at(row_of_[i], col_of_[j]);
        const S& rhs = a_.at(row_of_[n_ - 1 - i], col_of_[n_ - 1 - j]);
        const bool plus = ((i + j) % 2 == 0) != skew_;
        return lhs == (plus ? rhs : -rhs);
    }

    const Matrix<S>& a_;
    std::size_t n_;
    bool skew_;
    std::size_t total_;
    std::vector<std::size_t> row_of_;
    std::vector<std::size_t> col_of_;
    std::vector<bool> row_used_;
    std::vector<bool> col_used_;
};

} // namespace detail

template <FieldScalar S>
bool exists_alt_centro_ordering(const Matrix<S>& a, bool skew) {
    if (!a.square()) throw dimension_error("reordering search needs a square matrix");
    return detail::ReorderSearch<S>(a, skew).exists();
}

// True iff NO simultaneous row/column reordering makes A alternating
// centrosymmetric or alternating skew-centrosymmetric. Entries must lie in
// {-1, 0, 1}; the search is exponential, hence the order guard.
template <FieldScalar S>
bool no_alt_centro_ordering(const Matrix<S>& a, std::size_t max_order = 8) {
    if (!a.square()) throw dimension_error("reordering search needs a square matrix");
    if (a.rows() > max_order)
        throw guard_error("order " + std::to_string(a.rows()) + " exceeds the search guard " +
                          std::to_string(max_order) + "; raise the guard to proceed");
    const S zero = zero_like(a.exemplar());
    const S one = one_like(a.exemplar());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const S& e = a.at(i, j);
            if (e != zero && e != one && e != -one)
                throw contract_error("entries must lie in {-1, 0, 1}");
        }
    return !exists_alt_centro_ordering(a, false) && !exists_alt_centro_ordering(a, true);
}

} // namespace centro
