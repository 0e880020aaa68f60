#pragma once

// Seeded generators and brute-force oracles shared by the unit tests.
// The oracles work on raw GMP values and never call into the library's
// series, recurrence or closed-form code.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "qbern/lambda_polynomial.hpp"
#include "qbern/rational_function.hpp"

namespace testing {

using qbern::Integer;
using qbern::Rational;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long bound = 9) {
        const long n = integer(-bound, bound);
        const long d = integer(1, bound);
        return Rational(Integer(n), Integer(d));
    }

    Rational nonzero_rational(long bound = 9) {
        Rational r;
        do r = rational(bound);
        while (r.is_zero());
        return r;
    }

    qbern::PolynomialZ poly_z(std::size_t max_degree, long bound = 4) {
        std::vector<Integer> c(index(0, max_degree) + 1);
        for (auto& v : c) v = integer(-bound, bound);
        return qbern::PolynomialZ(std::move(c));
    }

    qbern::PolynomialQ poly_q(std::size_t max_degree, long bound = 4) {
        std::vector<Rational> c(index(0, max_degree) + 1);
        for (auto& v : c) v = rational(bound);
        return qbern::PolynomialQ(std::move(c));
    }

    qbern::PolynomialZ nonzero_poly_z(std::size_t max_degree, long bound = 4) {
        qbern::PolynomialZ p;
        do p = poly_z(max_degree, bound);
        while (p.is_zero());
        return p;
    }

    /// Products of small factors so that gcds are frequently nontrivial.
    qbern::RationalFunction rational_function() {
        qbern::PolynomialZ shared = nonzero_poly_z(2, 2);
        qbern::PolynomialZ num = poly_z(3) * shared;
        qbern::PolynomialZ den = nonzero_poly_z(3) * shared;
        return qbern::RationalFunction::normalize(num, den);
    }

    qbern::LambdaPolynomial lambda_polynomial(std::size_t max_degree = 2) {
        std::vector<qbern::RationalFunction> c(index(0, max_degree) + 1);
        for (auto& v : c) v = coin() ? rational_function() : qbern::RationalFunction(rational());
        return qbern::LambdaPolynomial(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

inline mpq_class horner(const std::vector<Integer>& coeffs, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

/// Value of f at q0 straight from its numerator and denominator coefficients.
inline mpq_class value_at(const qbern::RationalFunction& f, const mpq_class& q0) {
    const mpq_class d = horner(f.den().coefficients(), q0);
    return horner(f.num().coefficients(), q0) / d;
}

inline mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline mpq_class power(const mpq_class& x, unsigned long e) {
    mpq_class out = 1;
    for (unsigned long k = 0; k < e; ++k) out *= x;
    return out;
}

/// Bernoulli numbers with B_1 = -1/2 by the Akiyama-Tanigawa algorithm.
inline std::vector<mpq_class> bernoulli_numbers(std::size_t n_max) {
    std::vector<mpq_class> out;
    std::vector<mpq_class> a(n_max + 1);
    for (std::size_t m = 0; m <= n_max; ++m) {
        a[m] = mpq_class(1, m + 1);
        for (std::size_t j = m; j >= 1; --j) a[j - 1] = mpq_class(j) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    if (n_max >= 1) out[1] = -out[1];
    return out;
}

/// EGF product sum_k C(n,k) a_k b_{n-k}.
inline std::vector<mpq_class> egf_product(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> out(std::min(a.size(), b.size()));
    for (std::size_t n = 0; n < out.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) out[n] += mpq_class(binom(n, k)) * a[k] * b[n - k];
    }
    return out;
}

/// B_n^{(r)}(x) for n <= n_max as an r-fold EGF convolution of Bernoulli numbers with powers of x.
inline std::vector<mpq_class> higher_bernoulli_row(std::size_t n_max, std::size_t r, const mpq_class& x) {
    const auto b = bernoulli_numbers(n_max);
    std::vector<mpq_class> acc(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) acc[n] = power(x, n);
    for (std::size_t k = 0; k < r; ++k) acc = egf_product(acc, b);
    return acc;
}

/// Coefficients of x(x-1)...(x-n+1) by repeated multiplication.
inline std::vector<mpz_class> falling_product(std::size_t n) {
    std::vector<mpz_class> c{1};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<mpz_class> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= mpz_class(k) * c[i];
        }
        c = std::move(next);
    }
    return c;
}

/// 1 + q^m + ... + q^{m(k-1)} as coefficients.
inline std::vector<Integer> geometric(std::size_t k, std::size_t m = 1) {
    std::vector<Integer> c(k == 0 ? 0 : m * (k - 1) + 1);
    for (std::size_t a = 0; a < k; ++a) c[m * a] += 1;
    return c;
}

inline qbern::RationalFunction rf_poly(const std::vector<Integer>& coeffs) {
    return qbern::RationalFunction(qbern::PolynomialZ(coeffs));
}

inline Rational to_rational(const mpq_class& v) { return Rational(v.get_num(), v.get_den()); }

}  // namespace testing
