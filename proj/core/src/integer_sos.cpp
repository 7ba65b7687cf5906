#include "centro/integer_sos.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "centro/primality.hpp"

namespace centro {

namespace {

Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

// Pollard rho. Caller guarantees n is composite, odd, > 1; a composite
// always has a factor found by some polynomial offset c, so the retry loop
// terminates (the guard below turns a broken caller into an error instead of
// a spin).
Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (Integer c = 1; c < 1000; ++c) {
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) break; // cycle without factor; retry with next c
            d = boost::multiprecision::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
    throw arithmetic_error("factorization failed for " + n.str());
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// z with z^2 == -1 (mod p), for prime p == 1 (mod 4): raise the first
// quadratic non-residue to the power (p-1)/4.
Integer sqrt_minus_one_mod(const Integer& p) {
    Integer exp = (p - 1) / 2;
    for (Integer a = 2;; ++a) {
        if (pow_mod(a, exp, p) == p - 1) {
            Integer z = pow_mod(a, (p - 1) / 4, p);
            if ((z * z) % p != p - 1) throw arithmetic_error("sqrt(-1) extraction failed");
            return z;
        }
    }
}

// Hermite-Serret: Euclidean descent on (p, z) stops at the first remainder
// below sqrt(p); together with the next remainder it represents p.
std::pair<Integer, Integer> prime_two_squares(const Integer& p) {
    if (p == 2) return {1, 1};
    Integer z = sqrt_minus_one_mod(p);
    Integer bound = isqrt(p);
    Integer a = p, b = z;
    while (b > bound) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    Integer x = b, y = a % b;
    if (x * x + y * y != p) throw arithmetic_error("descent failed for prime " + p.str());
    return {x, y};
}

} // namespace

std::vector<PrimePower> factorize(const Integer& n) {
    if (n < 0) throw arithmetic_error("factorize expects a nonnegative integer");
    std::map<Integer, unsigned> factors;
    Integer m = n;
    if (m > 1) {
        for (Integer p = 2; p <= 1000000 && p * p <= m; p == 2 ? p = 3 : p += 2) {
            while (m % p == 0) {
                ++factors[p];
                m /= p;
            }
        }
        factor_into(m, factors);
    }
    std::vector<PrimePower> out;
    out.reserve(factors.size());
    for (const auto& [p, e] : factors) out.push_back({p, e});
    return out;
}

std::optional<PrimePower> sum_of_two_squares_obstruction(const Integer& n) {
    if (n < 0) throw arithmetic_error("expected a nonnegative integer");
    if (n <= 1) return std::nullopt;
    for (const auto& pp : factorize(n))
        if (pp.prime % 4 == 3 && pp.exponent % 2 == 1) return pp;
    return std::nullopt;
}

std::vector<TwoSquares> enumerate_two_squares(const Integer& n) {
    if (n < 0) throw arithmetic_error("expected a nonnegative integer");
    if (auto bad = sum_of_two_squares_obstruction(n)) {
        throw contract_error(n.str() + " is not a sum of two squares: prime " + bad->prime.str() +
                             " (4k+3) has odd exponent " + std::to_string(bad->exponent));
    }
    if (n == 0) return {TwoSquares(0, 0, 0)};

    // Fixed scalar part: 2^e contributes (1+i)^e; q^(2f) for q == 3 (mod 4)
    // contributes the scalar q^f. Primes p == 1 (mod 4) split as pi^a *
    // conj(pi)^(e-a); ranging over a yields every representation.
    struct SplitPrime {
        Integer re, im; // pi
        unsigned exponent;
    };
    Integer scalar = 1;
    Integer base_re = 1, base_im = 0;
    std::vector<SplitPrime> split;
    for (const auto& pp : factorize(n)) {
        if (pp.prime == 2) {
            for (unsigned i = 0; i < pp.exponent; ++i) {
                Integer re = base_re - base_im, im = base_re + base_im;
                base_re = re;
                base_im = im;
            }
        } else if (pp.prime % 4 == 3) {
            for (unsigned i = 0; i < pp.exponent / 2; ++i) scalar *= pp.prime;
        } else {
            auto [x, y] = prime_two_squares(pp.prime);
            split.push_back({x, y, pp.exponent});
        }
    }

    std::vector<std::pair<Integer, Integer>> accum{{base_re * scalar, base_im * scalar}};
    for (const auto& sp : split) {
        std::vector<std::pair<Integer, Integer>> next;
        for (const auto& [re0, im0] : accum) {
            for (unsigned a = 0; a <= sp.exponent; ++a) {
                Integer re = re0, im = im0;
                for (unsigned i = 0; i < a; ++i) {
                    Integer r = re * sp.re - im * sp.im;
                    Integer m = re * sp.im + im * sp.re;
                    re = r;
                    im = m;
                }
                for (unsigned i = a; i < sp.exponent; ++i) {
                    Integer r = re * sp.re + im * sp.im;
                    Integer m = -re * sp.im + im * sp.re;
                    re = r;
                    im = m;
                }
                next.emplace_back(re, im);
            }
        }
        accum = std::move(next);
    }

    std::set<std::pair<Integer, Integer>> canonical;
    for (auto& [re, im] : accum) {
        Integer x = abs_int(re), y = abs_int(im);
        if (x < y) std::swap(x, y);
        canonical.emplace(x, y);
    }
    std::vector<TwoSquares> out;
    for (auto it = canonical.rbegin(); it != canonical.rend(); ++it)
        out.emplace_back(it->first, it->second, n);
    return out;
}

TwoSquares decompose_two_squares(const Integer& n) {
    return enumerate_two_squares(n).front();
}

} // namespace centro
