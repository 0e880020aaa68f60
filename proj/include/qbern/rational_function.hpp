#pragma once

// Rational functions in q with exact canonical form.
//
// Canonical representative of N/D: N, D in Z[q] coprime in Q[q], the integer
// contents of N and D share no common factor, and lc(D) > 0.  Zero is 0/1.
// Two values are equal iff their representatives are identical.

#include <optional>
#include <span>
#include <string>

#include "qbern/polynomial.hpp"

namespace qbern {

/// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
Integer content(const PolynomialZ& p);

/// p / content(p) with positive leading coefficient.
PolynomialZ primitive_part(const PolynomialZ& p);

/// Primitive gcd over Z[q] with positive leading coefficient (modular algorithm).
/// gcd(0, 0) = 0.
PolynomialZ gcd(const PolynomialZ& a, const PolynomialZ& b);

/// a / b when b divides a exactly in Z[q].
std::optional<PolynomialZ> exact_quotient(const PolynomialZ& a, const PolynomialZ& b);

/// Scales a rational polynomial to an integer one: returns (Z-poly, s) with p = Zpoly / s, s > 0.
std::pair<PolynomialZ, Integer> clear_denominators(const PolynomialQ& p);

class RationalFunction {
public:
    RationalFunction() : den_(Integer(1)) {}

    template <std::integral T>
    RationalFunction(T v) : RationalFunction(Rational(v)) {}

    RationalFunction(const Rational& v);

    RationalFunction(const PolynomialZ& p) : num_(p), den_(Integer(1)) {}

    /// Canonical form of num/den.  Throws DomainError when den = 0.
    static RationalFunction normalize(const PolynomialQ& num, const PolynomialQ& den);
    static RationalFunction normalize(PolynomialZ num, PolynomialZ den);

    /// c * q^k.
    static RationalFunction monomial(const Rational& c, std::size_t k);
    static RationalFunction q() { return monomial(Rational(1), 1); }

    const PolynomialZ& num() const { return num_; }
    const PolynomialZ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    /// q -> q^w.  Keeps canonical form without renormalizing.
    RationalFunction substitute_power(std::size_t w) const;

private:
    struct Canonical {};
    RationalFunction(PolynomialZ n, PolynomialZ d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}

    // Fixes content and sign of an already-coprime pair.
    static RationalFunction from_coprime(PolynomialZ n, PolynomialZ d);

    PolynomialZ num_;
    PolynomialZ den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline RationalFunction inverse_unit(const RationalFunction& f) { return f.inverse(); }

/// Sum over a shared common denominator with a single final reduction.
RationalFunction sum(std::span<const RationalFunction> terms);

/// lim_{q->1} f.  Throws DomainError at a pole.
Rational limit_at_q1(const RationalFunction& f);

/// f(q0).  Throws DomainError when the denominator vanishes at q0.
Rational eval_at(const RationalFunction& f, const Rational& q0);

/// Canonical text "(num)/(den)", e.g. "(-1)/(1+q)".
std::string to_string(const RationalFunction& f);

}  // namespace qbern
