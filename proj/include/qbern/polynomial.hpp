#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// The variable name is part of the type so that polynomials in q, in the
// degenerate parameter (printed "L") and in a symbolic x never mix by accident.

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qbern/rational.hpp"

namespace qbern {

template <class C, char Var>
class Polynomial;

template <class T>
struct is_polynomial : std::false_type {};
template <class C, char Var>
struct is_polynomial<Polynomial<C, Var>> : std::true_type {};

template <class C, char Var>
class Polynomial {
public:
    using coefficient_type = C;
    static constexpr char variable_name = Var;

    Polynomial() = default;

    Polynomial(C constant) {
        if (!qbern_is_zero(constant)) c_.push_back(std::move(constant));
    }

    /// Lifts scalars that convert to the coefficient ring (e.g. Rational into nested rings).
    template <class S>
        requires(!std::is_same_v<std::remove_cvref_t<S>, C> && !is_polynomial<std::remove_cvref_t<S>>::value &&
                 std::is_constructible_v<C, const S&>)
    Polynomial(const S& s) : Polynomial(C(s)) {}

    explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial variable() { return monomial(C(1), 1); }

    static Polynomial monomial(C c, std::size_t k) {
        if (qbern_is_zero(c)) return {};
        std::vector<C> v(k + 1, C(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t size() const { return c_.size(); }

    /// Coefficient of Var^k (zero beyond the degree).
    C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
    const C& operator[](std::size_t k) const { return c_[k]; }
    const C& lead() const { return c_.back(); }
    const std::vector<C>& coefficients() const { return c_; }

    /// Lowest power with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (!qbern_is_zero(c_[k])) return k;
        }
        return 0;
    }

    Polynomial operator-() const {
        Polynomial out(*this);
        for (auto& c : out.c_) c = -c;
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
        if constexpr (std::is_same_v<C, Integer>) {
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                if (sgn(a.c_[i]) == 0) continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j) {
                    mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
                }
            }
        } else {
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                if (qbern_is_zero(a.c_[i])) continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    /// Scalar multiple.
    Polynomial scaled(const C& s) const {
        if (qbern_is_zero(s)) return {};
        Polynomial out(*this);
        for (auto& c : out.c_) c *= s;
        out.trim();
        return out;
    }

    /// Multiplies by Var^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<C> v(k, C(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Polynomial(std::move(v));
    }

    /// Substitutes Var -> Var^w.
    Polynomial substitute_power(std::size_t w) const {
        if (is_zero() || w == 1) return *this;
        std::vector<C> v((c_.size() - 1) * w + 1, C(0));
        for (std::size_t k = 0; k < c_.size(); ++k) v[k * w] = c_[k];
        return Polynomial(std::move(v));
    }

    Polynomial pow(unsigned long e) const {
        Polynomial result(C(1));
        Polynomial base(*this);
        while (e > 0) {
            if (e & 1UL) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    /// Horner evaluation in any ring that accepts C coefficients.
    template <class V>
    V evaluate(const V& x) const {
        V acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + V(c_[k]);
        return acc;
    }

    template <class F>
    auto map(F&& f) const {
        using D = std::remove_cvref_t<decltype(f(std::declval<const C&>()))>;
        std::vector<D> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(f(c));
        return Polynomial<D, Var>(std::move(v));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    template <class T>
    static bool qbern_is_zero(const T& v) {
        using qbern::is_zero;
        return is_zero(v);
    }

    void trim() {
        while (!c_.empty() && qbern_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

template <class C, char Var>
bool is_zero(const Polynomial<C, Var>& p) {
    return p.is_zero();
}

/// Only constant polynomials with invertible constant term are units.
template <class C, char Var>
Polynomial<C, Var> inverse_unit(const Polynomial<C, Var>& p) {
    if (p.degree() != 0) throw DomainError("polynomial is not a unit of its coefficient ring");
    return Polynomial<C, Var>(inverse_unit(p[0]));
}

using PolynomialZ = Polynomial<Integer, 'q'>;
using PolynomialQ = Polynomial<Rational, 'q'>;
/// Polynomial in the degenerate parameter with rational coefficients.
using RationalLambdaPolynomial = Polynomial<Rational, 'L'>;
/// Polynomial in a symbolic x with rational coefficients.
using XPolynomial = Polynomial<Rational, 'x'>;
/// Polynomial in the degenerate parameter whose coefficients are polynomials in x.
using XLambdaPolynomial = Polynomial<XPolynomial, 'L'>;

/// Renders with ascending powers, e.g. "1-q+2*q^3"; "0" for zero.
template <char Var>
std::string to_string(const Polynomial<Integer, Var>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Integer& c = p[k];
        if (sgn(c) == 0) continue;
        const bool neg = sgn(c) < 0;
        const Integer mag = abs(c);
        if (neg) out += "-";
        else if (!out.empty()) out += "+";
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += Var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

template <char Var>
std::string to_string(const Polynomial<Rational, Var>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rational& c = p[k];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (neg) out += "-";
        else if (!out.empty()) out += "+";
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1)) out += mag.str() + "*";
        out += Var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace qbern
