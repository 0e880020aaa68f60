#pragma once

// q-numbers, degenerate falling factorials, Stirling numbers of the first kind,
// Bernoulli numbers of the second kind and the symmetric T-sums.

#include <cstddef>
#include <vector>

#include "qbern/rational_function.hpp"

namespace qbern {

/// The argument x = e / w read in base q^w, so that (q^w)^x = q^e is an integral power.
class QExponentArg {
public:
    QExponentArg(std::size_t e, std::size_t w);

    /// x given as a rational; rejected unless x * w is a nonnegative integer.
    static QExponentArg from_rational(const Rational& x, std::size_t w);

    std::size_t e() const { return e_; }
    std::size_t w() const { return w_; }
    Rational value() const { return Rational(Integer(static_cast<unsigned long>(e_)), Integer(static_cast<unsigned long>(w_))); }

    friend bool operator==(const QExponentArg&, const QExponentArg&) = default;

private:
    std::size_t e_;
    std::size_t w_;
};

/// [x]_{q^w} = (1 - q^e) / (1 - q^w).
RationalFunction q_number(const QExponentArg& arg);

/// [k]_{q^m} = 1 + q^m + ... + q^{m(k-1)} for integral k.
PolynomialZ q_integer(std::size_t k, std::size_t m = 1);

/// Signed Stirling numbers of the first kind: x(x-1)...(x-n+1) = sum_l S1(n,l) x^l.
/// Returns 0 for l > n.
Integer stirling1(std::size_t n, std::size_t l);

/// (S1(n,0), ..., S1(n,n)): y(y-lam)...(y-(n-1)lam) = sum_l S1(n,l) lam^{n-l} y^l.
std::vector<Integer> falling_factorial_expand(std::size_t n);

/// b_n with t / log(1+t) = sum b_n t^n / n!.
Rational bernoulli_second_kind(std::size_t n);

/// T^{(r)}_{n,i}(w | q^m) = sum_{j in [0,w)^r} q^{m(n-i)|j|} [|j|]_{q^m}^i, with 0^0 = 1.
RationalFunction t_sum(std::size_t n, std::size_t i, std::size_t r, std::size_t w, std::size_t m);

}  // namespace qbern
