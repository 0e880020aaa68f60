#pragma once

// Carlitz q-Bernoulli numbers and polynomials, their higher-order versions and
// the higher-order degenerate q-Bernoulli polynomials.

#include <cstddef>
#include <span>

#include "qbern/lambda_polynomial.hpp"
#include "qbern/qcore.hpp"

namespace qbern {

/// The degenerate parameter actually used is scale * lambda.
struct LambdaScaling {
    RationalFunction scale{1};

    static LambdaScaling plain() { return {RationalFunction(1)}; }
    static LambdaScaling non_degenerate() { return {RationalFunction()}; }
    /// lambda / [w]_q.
    static LambdaScaling over_q_number(std::size_t w);
};

/// Parameters of beta^{(r)}_{n, scale*lambda, q^w}(x); the base w is x.w().
struct QBernParams {
    QBernParams(std::size_t n, std::size_t r, QExponentArg x, LambdaScaling lam = LambdaScaling::plain());

    std::size_t n;
    std::size_t r;
    QExponentArg x;
    LambdaScaling lam;

    std::size_t base() const { return x.w(); }
};

/// beta_{n,q} from q(q beta + 1)^n - beta_n = [n = 1], beta_0 = 1.
RationalFunction carlitz_beta(std::size_t n);

/// beta_{n,Q}(x) = sum_l C(n,l) [x]_Q^{n-l} Q^{lx} beta_{l,Q} with Q = q^{x.w()}.
RationalFunction carlitz_beta_poly(std::size_t n, const QExponentArg& x);

/// beta^{(r)}_{n,Q}(x), Q = q^{x.w()}, via the moment form
///   (1-Q)^{-n} sum_l C(n,l) (-1)^l Q^{lx} ((l+1)/[l+1]_Q)^r.
RationalFunction higher_beta(std::size_t n, std::size_t r, const QExponentArg& x);

/// sum_l stirling_row[l] (c lambda)^{n-l} moments[l], with n = stirling_row.size() - 1.
LambdaPolynomial degenerate_combine(std::span<const Integer> stirling_row, const RationalFunction& c,
                                    std::span<const RationalFunction> moments);

/// beta^{(r)}_{n, c lambda, q^w}(x) = sum_l S1(n,l) (c lambda)^{n-l} beta^{(r)}_{l,q^w}(x).
LambdaPolynomial degenerate_higher_beta(const QBernParams& p);

}  // namespace qbern
