#include "doctest.h"

#include "qbern/padic.hpp"
#include "qbern/qbernoulli.hpp"
#include "qbern/series.hpp"
#include "support.hpp"

using namespace qbern;

namespace {

// beta_n(q0) from q0 (q0 beta + 1)^n - beta_n = [n = 1] in plain rationals.
std::vector<mpq_class> carlitz_numbers_at(std::size_t n_max, const mpq_class& q0) {
    std::vector<mpq_class> beta{1};
    for (std::size_t m = 1; m <= n_max; ++m) {
        mpq_class rest = 0;
        for (std::size_t k = 0; k < m; ++k) {
            rest += mpq_class(testing::binom(m, k)) * testing::power(q0, k + 1) * beta[k];
        }
        // q0 * q0^m beta_m + rest - beta_m = [m = 1]
        const mpq_class rhs = mpq_class(m == 1 ? 1 : 0) - rest;
        beta.push_back(rhs / (testing::power(q0, m + 1) - 1));
    }
    return beta;
}

// beta_n(x) at q0 for integral x: sum_l C(n,l) [x]^{n-l} q0^{lx} beta_l.
mpq_class carlitz_poly_at(std::size_t n, std::size_t x, const mpq_class& q0) {
    const auto beta = carlitz_numbers_at(n, q0);
    const mpq_class bracket = (1 - testing::power(q0, x)) / (1 - q0);
    mpq_class acc = 0;
    for (std::size_t l = 0; l <= n; ++l) {
        acc += mpq_class(testing::binom(n, l)) * testing::power(bracket, n - l) * testing::power(q0, l * x) * beta[l];
    }
    return acc;
}

}  // namespace

TEST_CASE("carlitz q-bernoulli numbers") {
    CHECK(carlitz_beta(0) == RationalFunction(1));
    CHECK(to_string(carlitz_beta(1)) == "(-1)/(1+q)");
    const auto b = testing::bernoulli_numbers(10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(limit_at_q1(carlitz_beta(n)) == testing::to_rational(b[n]));
}

TEST_CASE("carlitz numbers match the recurrence at rational points") {
    for (const auto& q0 : {mpq_class(2), mpq_class(4), mpq_class(-3), mpq_class(1, 2), mpq_class(-2, 7)}) {
        const auto expect = carlitz_numbers_at(9, q0);
        for (std::size_t n = 0; n <= 9; ++n) CHECK(testing::value_at(carlitz_beta(n), q0) == expect[n]);
    }
}

TEST_CASE("carlitz q-bernoulli polynomials") {
    for (std::size_t n = 0; n <= 6; ++n) CHECK(carlitz_beta_poly(n, QExponentArg(0, 1)) == carlitz_beta(n));
    CHECK(to_string(carlitz_beta_poly(1, QExponentArg(1, 1))) == "(1)/(1+q)");
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t x = 0; x <= 3; ++x) {
            CHECK(limit_at_q1(carlitz_beta_poly(n, QExponentArg(x, 1))) == classical_bernoulli(n, Rational(x)));
            for (const auto& q0 : {mpq_class(3), mpq_class(-1, 3)}) {
                CHECK(testing::value_at(carlitz_beta_poly(n, QExponentArg(x, 1)), q0) == carlitz_poly_at(n, x, q0));
            }
        }
    }
}

TEST_CASE("carlitz polynomials in base q^w substitute q -> q^w") {
    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t x = 0; x <= 2; ++x) {
            for (std::size_t w = 1; w <= 3; ++w) {
                CHECK(carlitz_beta_poly(n, QExponentArg(x * w, w)) ==
                      carlitz_beta_poly(n, QExponentArg(x, 1)).substitute_power(w));
            }
        }
    }
}

TEST_CASE("higher-order closed form, r = 1 oracle") {
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t x = 0; x <= 3; ++x) {
            CHECK(higher_beta(n, 1, QExponentArg(x, 1)) == carlitz_beta_poly(n, QExponentArg(x, 1)));
        }
    }
}

TEST_CASE("higher-order closed form examples") {
    for (std::size_t r = 1; r <= 3; ++r) CHECK(higher_beta(0, r, QExponentArg(2, 1)) == RationalFunction(1));
    const auto b = higher_beta(1, 2, QExponentArg(0, 1));
    CHECK(to_string(b) == "(-3-q)/(1+2*q+q^2)");
    CHECK(limit_at_q1(b) == Rational(-1));
}

TEST_CASE("higher-order closed form, r = 2 truncated integral oracle") {
    const padic::PadicContext ctx(3, Rational(4), 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        const Rational target = eval_at(higher_beta(n, 2, QExponentArg(0, 1)), ctx.q0());
        const auto seq = padic::valuation_sequence(
            [&](std::size_t N) { return padic::multi_muq_truncated(n, 2, 0, ctx, N, padic::Integrand::plain_power); },
            target, 3, 1, 3);
        CHECK(padic::converges(seq));
    }
}

TEST_CASE("higher-order classical limits") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t r = 1; r <= 3; ++r) {
            for (std::size_t x = 0; x <= 2; ++x) {
                const auto row = testing::higher_bernoulli_row(n, r, mpq_class(x));
                CHECK(limit_at_q1(higher_beta(n, r, QExponentArg(x, 1))) == testing::to_rational(row[n]));
            }
        }
    }
}

TEST_CASE("degenerate higher-order q-bernoulli polynomials") {
    CHECK(degenerate_higher_beta(QBernParams(0, 2, QExponentArg(1, 1))) == LambdaPolynomial(RationalFunction(1)));
    CHECK_THROWS_AS(QBernParams(1, 0, QExponentArg(0, 1)), std::invalid_argument);
    for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t r = 1; r <= 3; ++r) {
            for (std::size_t x = 0; x <= 2; ++x) {
                const auto f = degenerate_higher_beta(QBernParams(n, r, QExponentArg(x, 1)));
                CHECK(f.coeff(0) == higher_beta(n, r, QExponentArg(x, 1)));
                if (n >= 1) CHECK(f.degree() <= static_cast<long>(n) - 1);
                CHECK(limit_at_q1(f) == higher_degenerate_bernoulli(n, r, Rational(x)));
                const auto flat =
                    degenerate_higher_beta(QBernParams(n, r, QExponentArg(x, 1), LambdaScaling::non_degenerate()));
                CHECK(flat == LambdaPolynomial(higher_beta(n, r, QExponentArg(x, 1))));
            }
        }
    }
}

TEST_CASE("lambda scaling multiplies the lambda^k coefficient by c^k") {
    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t w = 1; w <= 3; ++w) {
            const QExponentArg x(2 * w, w);
            const auto plain = degenerate_higher_beta(QBernParams(n, 2, x));
            const auto scaled = degenerate_higher_beta(QBernParams(n, 2, x, LambdaScaling::over_q_number(w)));
            const auto c = q_number(QExponentArg(w, 1)).inverse();
            for (std::size_t k = 0; k < plain.size(); ++k) {
                CHECK(scaled.coeff(k) == plain.coeff(k) * c.pow(static_cast<long>(k)));
            }
        }
    }
}

TEST_CASE("distribution formula") {
    // beta^{(r)}_{n,q}(w x) = [w]^{n-r} sum_{j in [0,w)^r} q^{|j|} beta^{(r)}_{n,q^w}(x + |j|/w)
    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t r = 1; r <= 2; ++r) {
            for (std::size_t w = 1; w <= 3; ++w) {
                for (std::size_t x = 0; x <= 2; ++x) {
                    std::vector<RationalFunction> terms;
                    for (std::size_t j1 = 0; j1 < w; ++j1) {
                        for (std::size_t j2 = 0; j2 < (r == 2 ? w : 1); ++j2) {
                            const std::size_t s = j1 + j2;
                            terms.push_back(RationalFunction::monomial(Rational(1), s) *
                                            higher_beta(n, r, QExponentArg(w * x + s, w)));
                        }
                    }
                    const auto bracket = testing::rf_poly(testing::geometric(w));
                    CHECK(higher_beta(n, r, QExponentArg(w * x, 1)) ==
                          sum(terms) * bracket.pow(static_cast<long>(n) - static_cast<long>(r)));
                }
            }
        }
    }
}
