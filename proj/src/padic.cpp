#include "qbern/padic.hpp"

#include <map>

#include "qbern/series.hpp"

namespace qbern::padic {

long Valuation::value() const {
    if (!v_) throw std::logic_error("infinite valuation has no finite value");
    return *v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation(*a.v_ + *b.v_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
    }
    return *a.v_ <=> *b.v_;
}

namespace {

long integer_valuation(Integer n, unsigned long p) {
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    return v;
}

// Calls visit(sum) for every tuple in [0, bound)^r.
template <class F>
void for_each_tuple_sum(std::size_t r, std::uint64_t bound, F&& visit) {
    std::vector<std::uint64_t> t(r, 0);
    while (true) {
        std::uint64_t s = 0;
        for (const auto v : t) s += v;
        visit(s);
        std::size_t k = 0;
        while (k < r && ++t[k] == bound) t[k++] = 0;
        if (k == r) return;
    }
}

std::uint64_t checked_power(std::uint64_t base, std::size_t e, std::uint64_t budget) {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < e; ++k) {
        if (out > budget / base) throw ResourceError("truncated sum exceeds the term budget");
        out *= base;
    }
    return out;
}

Rational integrand(const Rational& u, std::size_t n, Integrand mode, const Rational& lam0) {
    if (mode == Integrand::plain_power) return u.pow(static_cast<long>(n));
    return degenerate_falling(u, lam0, n);
}

}  // namespace

Valuation vp(const Rational& x, unsigned long p) {
    if (x.is_zero()) return Valuation::infinity();
    return Valuation(integer_valuation(abs(x.num()), p) - integer_valuation(x.den(), p));
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PadicContext::PadicContext(unsigned long p, Rational q0, std::size_t n_max, Rational lam0)
    : p_(p), q0_(std::move(q0)), n_max_(n_max), lam0_(std::move(lam0)) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (vp(q0_ - Rational(1), p) < Valuation(1)) {
        throw std::invalid_argument("q0 = " + q0_.str() + " must satisfy v_p(q0 - 1) >= 1");
    }
    if (vp(lam0_, p) < Valuation(0)) {
        throw std::invalid_argument("lam0 = " + lam0_.str() + " must satisfy v_p(lam0) >= 0");
    }
}

PadicContext PadicContext::standard(unsigned long p, std::size_t n_max, Rational lam0) {
    return PadicContext(p, Rational(static_cast<long>(p + 1)), n_max, std::move(lam0));
}

PadicContext PadicContext::with_term_budget(std::uint64_t budget) const {
    PadicContext out(*this);
    out.term_budget_ = budget;
    return out;
}

std::uint64_t PadicContext::level_size(std::size_t N) const {
    if (N > n_max_) {
        throw ResourceError("level " + std::to_string(N) + " exceeds N_max = " + std::to_string(n_max_));
    }
    return checked_power(p_, N, term_budget_);
}

Rational PadicContext::q_number(std::size_t k) const {
    // (1 - q0^k)/(1 - q0); q0 != 1 by the context invariant.
    return (Rational(1) - q0_.pow(static_cast<long>(k))) / (Rational(1) - q0_);
}

Rational mu0_truncated(const PolynomialQ& f, const PadicContext& ctx, std::size_t N) {
    const std::uint64_t size = ctx.level_size(N);
    Rational acc(0);
    for (std::uint64_t x = 0; x < size; ++x) acc += f.evaluate(Rational(static_cast<long>(x)));
    return acc / Rational(static_cast<long>(size));
}

Valuation check_difference_eq(const PolynomialQ& f, const PadicContext& ctx, std::size_t N) {
    const std::uint64_t size = ctx.level_size(N);
    Rational shifted(0);
    for (std::uint64_t x = 0; x < size; ++x) shifted += f.evaluate(Rational(static_cast<long>(x + 1)));
    shifted /= Rational(static_cast<long>(size));
    const Rational derivative_at_zero = f.coeff(1);
    return vp(shifted - mu0_truncated(f, ctx, N) - derivative_at_zero, ctx.p());
}

Rational muq_truncated_moment(std::size_t l, const PadicContext& ctx, std::size_t N) {
    const std::uint64_t size = ctx.level_size(N);
    const Rational step = ctx.q0().pow(static_cast<long>(l + 1));
    Rational acc(0);
    Rational term(1);
    for (std::uint64_t y = 0; y < size; ++y) {
        acc += term;
        term *= step;
    }
    return acc / ctx.q_number(size);
}

Rational multi_muq_truncated(std::size_t n, std::size_t r, std::size_t x, const PadicContext& ctx, std::size_t N,
                             Integrand mode) {
    if (r == 0) throw std::invalid_argument("order r must be >= 1");
    const std::uint64_t size = ctx.level_size(N);
    checked_power(size, r, ctx.term_budget());
    std::map<std::uint64_t, Rational> by_sum;  // memo of g([x + s]) q0^s
    Rational acc(0);
    for_each_tuple_sum(r, size, [&](std::uint64_t s) {
        auto it = by_sum.find(s);
        if (it == by_sum.end()) {
            const Rational value = integrand(ctx.q_number(x + s), n, mode, ctx.lam0()) *
                                   ctx.q0().pow(static_cast<long>(s));
            it = by_sum.emplace(s, value).first;
        }
        acc += it->second;
    });
    return acc / ctx.q_number(size).pow(static_cast<long>(r));
}

Rational multi_mu0_truncated(std::size_t n, std::size_t r, const Rational& x, const PadicContext& ctx, std::size_t N,
                             Integrand mode) {
    if (r == 0) throw std::invalid_argument("order r must be >= 1");
    const std::uint64_t size = ctx.level_size(N);
    checked_power(size, r, ctx.term_budget());
    std::map<std::uint64_t, Rational> by_sum;
    Rational acc(0);
    for_each_tuple_sum(r, size, [&](std::uint64_t s) {
        auto it = by_sum.find(s);
        if (it == by_sum.end()) {
            it = by_sum.emplace(s, integrand(x + Rational(static_cast<long>(s)), n, mode, ctx.lam0())).first;
        }
        acc += it->second;
    });
    return acc / Rational(static_cast<long>(size)).pow(static_cast<long>(r));
}

FiniteSymmetryResult finite_level_symmetry(std::size_t n, std::size_t r, std::size_t w1, std::size_t w2,
                                           std::size_t x, const PadicContext& ctx, std::size_t N) {
    if (r == 0 || w1 == 0 || w2 == 0) throw std::invalid_argument("r, w1, w2 must be >= 1");
    const std::uint64_t size = ctx.level_size(N);
    checked_power(size * w1 * w2, r, ctx.term_budget());
    const std::uint64_t w12 = w1 * w2;
    const Rational norm = ctx.q_number(w12 * size).pow(static_cast<long>(r));

    // Sum over i in [0, a)^r, j in [0, b)^r, y in [0, p^N)^r of
    //   q0^{w1|i| + w2|j| + w1w2|y|} g([w1w2x + w2|j| + w1|i| + w1w2|y|]_{q0})
    auto side = [&](std::size_t a, std::size_t b, std::size_t coef_i, std::size_t coef_j) {
        std::map<std::uint64_t, Rational> memo;
        Rational acc(0);
        for_each_tuple_sum(r, a, [&](std::uint64_t si) {
            for_each_tuple_sum(r, b, [&](std::uint64_t sj) {
                for_each_tuple_sum(r, size, [&](std::uint64_t sy) {
                    const std::uint64_t expo = coef_i * si + coef_j * sj + w12 * sy;
                    auto it = memo.find(expo);
                    if (it == memo.end()) {
                        const Rational value =
                            ctx.q0().pow(static_cast<long>(expo)) *
                            integrand(ctx.q_number(w12 * x + expo), n, Integrand::degenerate_falling, ctx.lam0());
                        it = memo.emplace(expo, value).first;
                    }
                    acc += it->second;
                });
            });
        });
        return acc / norm;
    };
    // First form: i ranges over [0,w2), weighted by w1; j over [0,w1), weighted by w2.
    Rational lhs = side(w2, w1, w1, w2);
    // Role-swapped form: i over [0,w1) weighted by w2; j over [0,w2) weighted by w1.
    Rational rhs = side(w1, w2, w2, w1);
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

bool converges(const std::vector<Valuation>& seq, long min_gain) {
    if (seq.empty()) return false;
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if (seq[k] < seq[k - 1]) return false;
    }
    if (seq.back().is_infinite()) return true;
    if (seq.front().is_infinite()) return false;
    return seq.back().value() - seq.front().value() >= min_gain;
}

}  // namespace qbern::padic
