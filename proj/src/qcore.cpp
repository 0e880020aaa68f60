#include "qbern/qcore.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qbern/series.hpp"

namespace qbern {

QExponentArg::QExponentArg(std::size_t e, std::size_t w) : e_(e), w_(w) {
    if (w == 0) throw std::invalid_argument("QExponentArg: base multiplier must be >= 1");
}

QExponentArg QExponentArg::from_rational(const Rational& x, std::size_t w) {
    const Rational scaled = x * Rational(static_cast<long>(w));
    if (!scaled.is_integer() || scaled.sign() < 0) {
        throw std::invalid_argument("argument " + x.str() + " has no integral q-exponent in base q^" +
                                    std::to_string(w));
    }
    return QExponentArg(scaled.num().get_ui(), w);
}

PolynomialZ q_integer(std::size_t k, std::size_t m) {
    std::vector<Integer> v(k == 0 ? 0 : (k - 1) * m + 1, Integer(0));
    for (std::size_t a = 0; a < k; ++a) v[a * m] = 1;
    return PolynomialZ(std::move(v));
}

RationalFunction q_number(const QExponentArg& arg) {
    // (1 - q^e)/(1 - q^w) = [e/d]_{q^d} / [w/d]_{q^d} with d = gcd(e, w); the two
    // quotients share no cyclotomic factor, so the pair is already reduced.
    const std::size_t e = arg.e();
    const std::size_t w = arg.w();
    if (e == 0) return RationalFunction();
    const std::size_t d = std::gcd(e, w);
    const PolynomialZ num = q_integer(e / d, d);
    const PolynomialZ den = q_integer(w / d, d);
    if (den.degree() == 0) return RationalFunction(num);
    return RationalFunction(num) / RationalFunction(den);
}

namespace {

std::mutex stirling_mutex;
std::vector<std::vector<Integer>> stirling_rows{{Integer(1)}};

}  // namespace

std::vector<Integer> falling_factorial_expand(std::size_t n) {
    std::lock_guard lock(stirling_mutex);
    // S1(m+1, l) = S1(m, l-1) - m S1(m, l)
    while (stirling_rows.size() <= n) {
        const auto& prev = stirling_rows.back();
        const std::size_t m = stirling_rows.size() - 1;
        std::vector<Integer> row(m + 2, Integer(0));
        for (std::size_t l = 0; l <= m + 1; ++l) {
            if (l >= 1) row[l] += prev[l - 1];
            if (l <= m) row[l] -= prev[l] * static_cast<unsigned long>(m);
        }
        stirling_rows.push_back(std::move(row));
    }
    return stirling_rows[n];
}

Integer stirling1(std::size_t n, std::size_t l) {
    if (l > n) return Integer(0);
    return falling_factorial_expand(n)[l];
}

Rational bernoulli_second_kind(std::size_t n) {
    const std::size_t order = n + 1;
    std::vector<Rational> log1p(order + 1, Rational(0));
    for (std::size_t m = 1; m <= order; ++m) {
        log1p[m] = Rational(m % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(m));
    }
    const auto quotient = series_div(TruncatedSeries<Rational>::variable(order),
                                     TruncatedSeries<Rational>(std::move(log1p), order));
    return quotient.egf(n);
}

RationalFunction t_sum(std::size_t n, std::size_t i, std::size_t r, std::size_t w, std::size_t m) {
    if (i > n) throw std::invalid_argument("t_sum requires i <= n");
    if (r == 0 || w == 0 || m == 0) throw std::invalid_argument("t_sum requires r, w, m >= 1");
    PolynomialZ total;
    std::vector<std::size_t> j(r, 0);
    while (true) {
        std::size_t s = 0;
        for (const auto v : j) s += v;
        // q^{m(n-i)s} [s]_{q^m}^i; [0]^0 = 1 and [0]^i = 0 for i >= 1.
        if (i == 0 || s > 0) total += q_integer(s, m).pow(i).shifted(m * (n - i) * s);
        std::size_t k = 0;
        while (k < r && ++j[k] == w) j[k++] = 0;
        if (k == r) break;
    }
    return RationalFunction(total);
}

}  // namespace qbern
