#pragma once

// p-adic valuations and truncated p-adic integrals.
//
// Every truncated integral is an exact rational; convergence is judged by the
// p-adic valuation of its difference from a closed-form value.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbern/polynomial.hpp"

namespace qbern::padic {

/// Exceeded the configured term budget of a truncated multivariate sum.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// v_p value, or +infinity for zero.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    explicit Valuation(long v) : v_(v) {}

    bool is_infinite() const { return !v_.has_value(); }
    long value() const;

    friend Valuation operator+(const Valuation& a, const Valuation& b);
    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

    std::string str() const { return v_ ? std::to_string(*v_) : "inf"; }

private:
    Valuation() = default;
    std::optional<long> v_;
};

/// Valuation of x at the prime p (p is assumed prime).
Valuation vp(const Rational& x, unsigned long p);

bool is_prime(unsigned long n);

class PadicContext {
public:
    /// Requires p an odd prime, v_p(q0 - 1) >= 1 and v_p(lam0) >= 0.
    PadicContext(unsigned long p, Rational q0, std::size_t n_max, Rational lam0 = Rational(1));

    /// q0 = 1 + p, the default test point.
    static PadicContext standard(unsigned long p, std::size_t n_max, Rational lam0 = Rational(1));

    unsigned long p() const { return p_; }
    const Rational& q0() const { return q0_; }
    std::size_t n_max() const { return n_max_; }
    const Rational& lam0() const { return lam0_; }

    /// Largest number of summands any truncated sum may visit.
    std::uint64_t term_budget() const { return term_budget_; }
    PadicContext with_term_budget(std::uint64_t budget) const;

    /// p^N; throws ResourceError past n_max.
    std::uint64_t level_size(std::size_t N) const;

    /// [k]_{q0} for an integer k >= 0.
    Rational q_number(std::size_t k) const;

private:
    unsigned long p_;
    Rational q0_;
    std::size_t n_max_;
    Rational lam0_;
    std::uint64_t term_budget_ = 1'000'000;
};

enum class Integrand {
    /// g(u) = u^n
    plain_power,
    /// g(u) = (u | lam0)_n = u (u - lam0) ... (u - (n-1) lam0)
    degenerate_falling,
};

/// (1/p^N) sum_{x < p^N} f(x).
Rational mu0_truncated(const PolynomialQ& f, const PadicContext& ctx, std::size_t N);

/// v_p( mu0_N(f(x+1)) - mu0_N(f) - f'(0) ).
Valuation check_difference_eq(const PolynomialQ& f, const PadicContext& ctx, std::size_t N);

/// (1/[p^N]_{q0}) sum_{y < p^N} q0^{ly} q0^y.
Rational muq_truncated_moment(std::size_t l, const PadicContext& ctx, std::size_t N);

/// r-fold q-integral truncation of g([x + y_1 + ... + y_r]_{q0}) with weight q0^{sum y}.
Rational multi_muq_truncated(std::size_t n, std::size_t r, std::size_t x, const PadicContext& ctx, std::size_t N,
                             Integrand mode);

/// r-fold invariant-integral truncation of g(x + y_1 + ... + y_r).
Rational multi_mu0_truncated(std::size_t n, std::size_t r, const Rational& x, const PadicContext& ctx, std::size_t N,
                             Integrand mode);

struct FiniteSymmetryResult {
    Rational lhs;
    Rational rhs;
    bool equal;
};

/// Both finite-level forms of the symmetric double sum (roles of w1 and w2 swapped),
/// with the t-series replaced by its degenerate falling-factorial coefficient of order n.
FiniteSymmetryResult finite_level_symmetry(std::size_t n, std::size_t r, std::size_t w1, std::size_t w2,
                                           std::size_t x, const PadicContext& ctx, std::size_t N);

/// v_p(approx(N) - target) for N = first..last.
template <class F>
std::vector<Valuation> valuation_sequence(F&& approx, const Rational& target, unsigned long p, std::size_t first,
                                          std::size_t last) {
    std::vector<Valuation> out;
    for (std::size_t N = first; N <= last; ++N) out.push_back(vp(approx(N) - target, p));
    return out;
}

/// Nondecreasing and the last entry exceeds the first by at least min_gain;
/// an all-infinite sequence (exact at every level) also qualifies.
bool converges(const std::vector<Valuation>& seq, long min_gain = 2);

}  // namespace qbern::padic
