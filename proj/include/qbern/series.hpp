#pragma once

// Truncated formal power series in t and the Bernoulli families defined by
// generating functions (classical, higher-order, degenerate).
//
// Coefficients are stored plain (a_n of t^n); egf(n) returns n! a_n.

#include <cstddef>
#include <utility>
#include <vector>

#include "qbern/polynomial.hpp"

namespace qbern {

template <class C>
class TruncatedSeries {
public:
    /// The zero series known mod t^{order+1}.
    explicit TruncatedSeries(std::size_t order) : a_(order + 1, C(0)) {}

    /// Pads with zeros or drops terms beyond the order.
    TruncatedSeries(std::vector<C> coeffs, std::size_t order) : a_(std::move(coeffs)) { a_.resize(order + 1, C(0)); }

    static TruncatedSeries constant(C c, std::size_t order) {
        TruncatedSeries s(order);
        s.a_[0] = std::move(c);
        return s;
    }

    /// The series t (zero when order = 0).
    static TruncatedSeries variable(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) s.a_[1] = C(1);
        return s;
    }

    std::size_t order() const { return a_.size() - 1; }
    const C& operator[](std::size_t n) const { return a_[n]; }
    const std::vector<C>& coefficients() const { return a_; }

    /// n! a_n.
    C egf(std::size_t n) const { return a_.at(n) * C(Rational(factorial(n))); }

    /// Index of the first nonzero coefficient; order + 1 for the zero series.
    std::size_t valuation() const {
        for (std::size_t k = 0; k < a_.size(); ++k) {
            if (!is_zero_coeff(a_[k])) return k;
        }
        return a_.size();
    }

    /// Drops the first k coefficients (division by t^k); the order shrinks by k.
    TruncatedSeries divided_by_t(std::size_t k) const {
        return TruncatedSeries(std::vector<C>(a_.begin() + static_cast<long>(k), a_.end()), order() - k);
    }

    TruncatedSeries truncated(std::size_t order) const { return TruncatedSeries(a_, order); }

    TruncatedSeries operator-() const {
        TruncatedSeries s(*this);
        for (auto& c : s.a_) c = -c;
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
        const std::size_t k = std::min(x.order(), y.order());
        TruncatedSeries s(k);
        for (std::size_t n = 0; n <= k; ++n) s.a_[n] = x.a_[n] + y.a_[n];
        return s;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) { return x + (-y); }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
        const std::size_t k = std::min(x.order(), y.order());
        TruncatedSeries s(k);
        for (std::size_t i = 0; i <= k; ++i) {
            if (is_zero_coeff(x.a_[i])) continue;
            for (std::size_t j = 0; i + j <= k; ++j) s.a_[i + j] += x.a_[i] * y.a_[j];
        }
        return s;
    }

    TruncatedSeries pow(std::size_t e) const {
        TruncatedSeries out = constant(C(1), order());
        for (std::size_t k = 0; k < e; ++k) out = out * *this;
        return out;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static bool is_zero_coeff(const C& c) {
        using qbern::is_zero;
        return is_zero(c);
    }

    std::vector<C> a_;
};

/// numer / denom.  When denom has valuation v > 0, numer must vanish below t^v;
/// both are divided by t^v first and the quotient is known mod t^{K+1-v}.
/// Throws DomainError if denom is zero to working order or its leading
/// coefficient is not a unit.
template <class C>
TruncatedSeries<C> series_div(const TruncatedSeries<C>& numer, const TruncatedSeries<C>& denom) {
    const std::size_t order = std::min(numer.order(), denom.order());
    const std::size_t v = denom.truncated(order).valuation();
    if (v > order) throw DomainError("series division by a series that vanishes to working order");
    if (numer.truncated(order).valuation() < v) {
        throw DomainError("series division: numerator has lower valuation than denominator");
    }
    const TruncatedSeries<C> n = numer.truncated(order).divided_by_t(v);
    const TruncatedSeries<C> d = denom.truncated(order).divided_by_t(v);
    const C inv = inverse_unit(d[0]);
    const std::size_t k = order - v;
    std::vector<C> out(k + 1, C(0));
    for (std::size_t m = 0; m <= k; ++m) {
        C acc = n[m];
        for (std::size_t j = 1; j <= m; ++j) acc -= d[j] * out[m - j];
        out[m] = acc * inv;
    }
    return TruncatedSeries<C>(std::move(out), k);
}

/// e^{x t}.
template <class C>
TruncatedSeries<C> exp_series(const C& x, std::size_t order) {
    std::vector<C> a;
    C power(1);
    for (std::size_t n = 0; n <= order; ++n) {
        a.push_back(power * C(Rational(Integer(1), factorial(n))));
        power = power * x;
    }
    return TruncatedSeries<C>(std::move(a), order);
}

/// (x | lambda)_n = x (x - lambda) ... (x - (n-1) lambda), with (x | lambda)_0 = 1.
template <class C>
C degenerate_falling(const C& x, const C& lambda, std::size_t n) {
    C acc(1);
    for (std::size_t k = 0; k < n; ++k) acc = acc * (x - C(Rational(static_cast<long>(k))) * lambda);
    return acc;
}

/// (1 + lambda t)^{x / lambda}, whose EGF coefficients are (x | lambda)_n.
template <class C>
TruncatedSeries<C> degenerate_exp_series(const C& x, const C& lambda, std::size_t order) {
    std::vector<C> a;
    for (std::size_t n = 0; n <= order; ++n) {
        a.push_back(degenerate_falling(x, lambda, n) * C(Rational(Integer(1), factorial(n))));
    }
    return TruncatedSeries<C>(std::move(a), order);
}

/// log(1 + lambda t) / (lambda t) = sum_m (-lambda)^m t^m / (m + 1).
template <class C>
TruncatedSeries<C> degenerate_log_over_t(const C& lambda, std::size_t order) {
    std::vector<C> a;
    C power(1);
    for (std::size_t m = 0; m <= order; ++m) {
        a.push_back(power * C(Rational(1, static_cast<long>(m + 1))));
        power = power * (-lambda);
    }
    return TruncatedSeries<C>(std::move(a), order);
}

/// ((1 + lambda t)^{1/lambda} - 1) / t = sum_m (1 | lambda)_{m+1} t^m / (m+1)!.
template <class C>
TruncatedSeries<C> degenerate_exp_minus_one_over_t(const C& lambda, std::size_t order) {
    std::vector<C> a;
    for (std::size_t m = 0; m <= order; ++m) {
        a.push_back(degenerate_falling(C(1), lambda, m + 1) * C(Rational(Integer(1), factorial(m + 1))));
    }
    return TruncatedSeries<C>(std::move(a), order);
}

/// B_n(x) from t e^{xt} / (e^t - 1).
Rational classical_bernoulli(std::size_t n, const Rational& x);

/// B_0..B_{n_max} from the umbral recurrence (B + 1)^n - B_n = [n = 1].
std::vector<Rational> bernoulli_numbers_umbral(std::size_t n_max);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k} with B_k from the umbral recurrence.
Rational classical_bernoulli_umbral(std::size_t n, const Rational& x);

/// B_n^{(r)}(x) from (t / (e^t - 1))^r e^{xt}.
Rational higher_bernoulli(std::size_t n, std::size_t r, const Rational& x);

/// B_{n,lambda}(x): log(1+lambda t)^{1/lambda} / ((1+lambda t)^{1/lambda} - 1) * (1+lambda t)^{x/lambda}.
RationalLambdaPolynomial degenerate_bernoulli_kim(std::size_t n, const Rational& x);

/// B*_{n,lambda}(x): t / ((1+lambda t)^{1/lambda} - 1) * (1+lambda t)^{x/lambda}.
RationalLambdaPolynomial degenerate_bernoulli_carlitz(std::size_t n, const Rational& x);

/// B^{(r)}_{n,lambda}(x).
RationalLambdaPolynomial higher_degenerate_bernoulli(std::size_t n, std::size_t r, const Rational& x);

/// Symbolic-x versions: polynomials in lambda whose coefficients are polynomials in x.
XLambdaPolynomial degenerate_bernoulli_kim_symbolic(std::size_t n);
XLambdaPolynomial degenerate_bernoulli_carlitz_symbolic(std::size_t n);

}  // namespace qbern
