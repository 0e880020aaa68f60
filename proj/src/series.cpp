#include "qbern/series.hpp"

namespace qbern {

namespace {

// (t / (e^t - 1))^r e^{xt}, EGF coefficient n.
template <class C>
C bernoulli_family(std::size_t n, std::size_t r, const C& x) {
    const std::size_t order = n + 1;
    auto e_minus_one = exp_series(C(1), order) - TruncatedSeries<C>::constant(C(1), order);
    const auto base = series_div(TruncatedSeries<C>::variable(order), e_minus_one);
    return (base.pow(r) * exp_series(x, base.order())).egf(n);
}

enum class DegenerateKind { kim, carlitz };

// Degenerate generating functions with the common factor t cancelled first.
template <class C>
C degenerate_family(std::size_t n, std::size_t r, const C& x, const C& lambda, DegenerateKind kind) {
    const auto denom = degenerate_exp_minus_one_over_t(lambda, n);
    const auto numer = kind == DegenerateKind::kim ? degenerate_log_over_t(lambda, n)
                                                   : TruncatedSeries<C>::constant(C(1), n);
    const auto base = series_div(numer, denom);
    return (base.pow(r) * degenerate_exp_series(x, lambda, n)).egf(n);
}

}  // namespace

Rational classical_bernoulli(std::size_t n, const Rational& x) { return bernoulli_family<Rational>(n, 1, x); }

std::vector<Rational> bernoulli_numbers_umbral(std::size_t n_max) {
    // For m >= 2: sum_{k=0}^{m-1} C(m,k) B_k = 0, solved for B_{m-1}.
    std::vector<Rational> b{Rational(1)};
    for (std::size_t m = 2; m <= n_max + 1; ++m) {
        Rational acc(0);
        for (std::size_t k = 0; k + 1 < m; ++k) acc += Rational(binomial(m, k)) * b[k];
        b.push_back(-acc / Rational(binomial(m, m - 1)));
    }
    b.resize(n_max + 1);
    return b;
}

Rational classical_bernoulli_umbral(std::size_t n, const Rational& x) {
    const auto b = bernoulli_numbers_umbral(n);
    Rational acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += Rational(binomial(n, k)) * b[k] * x.pow(static_cast<long>(n - k));
    return acc;
}

Rational higher_bernoulli(std::size_t n, std::size_t r, const Rational& x) {
    return bernoulli_family<Rational>(n, r, x);
}

RationalLambdaPolynomial degenerate_bernoulli_kim(std::size_t n, const Rational& x) {
    return degenerate_family<RationalLambdaPolynomial>(n, 1, x, RationalLambdaPolynomial::variable(),
                                                       DegenerateKind::kim);
}

RationalLambdaPolynomial degenerate_bernoulli_carlitz(std::size_t n, const Rational& x) {
    return degenerate_family<RationalLambdaPolynomial>(n, 1, x, RationalLambdaPolynomial::variable(),
                                                       DegenerateKind::carlitz);
}

RationalLambdaPolynomial higher_degenerate_bernoulli(std::size_t n, std::size_t r, const Rational& x) {
    return degenerate_family<RationalLambdaPolynomial>(n, r, x, RationalLambdaPolynomial::variable(),
                                                       DegenerateKind::kim);
}

XLambdaPolynomial degenerate_bernoulli_kim_symbolic(std::size_t n) {
    return degenerate_family<XLambdaPolynomial>(n, 1, XLambdaPolynomial(XPolynomial::variable()),
                                                XLambdaPolynomial::variable(), DegenerateKind::kim);
}

XLambdaPolynomial degenerate_bernoulli_carlitz_symbolic(std::size_t n) {
    return degenerate_family<XLambdaPolynomial>(n, 1, XLambdaPolynomial(XPolynomial::variable()),
                                                XLambdaPolynomial::variable(), DegenerateKind::carlitz);
}

}  // namespace qbern
