#pragma once

// Exact scalars: arbitrary-precision integers and reduced rationals.

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qbern {

using Integer = mpz_class;

/// Thrown for mathematically undefined requests (division by zero, poles).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : v_(Integer(static_cast<long>(v))) {}

    Rational(const Integer& n) : v_(n) {}

    Rational(const Integer& n, const Integer& d);

    /// Parses "a", "-a" or "a/b".  Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integer power; negative exponents invert (zero base with e < 0 throws).
    Rational pow(long e) const;

    Rational inverse() const { return Rational(1) / *this; }

    /// "a" for integers, "a/b" otherwise.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    mpq_class v_{0};
};

inline bool is_zero(const Integer& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return v.is_zero(); }

inline Rational inverse_unit(const Rational& v) { return v.inverse(); }

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace qbern
