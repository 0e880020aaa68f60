#include "qbern/qbernoulli.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qbern {

LambdaScaling LambdaScaling::over_q_number(std::size_t w) {
    return {q_number(QExponentArg(w, 1)).inverse()};
}

QBernParams::QBernParams(std::size_t n_, std::size_t r_, QExponentArg x_, LambdaScaling lam_)
    : n(n_), r(r_), x(x_), lam(std::move(lam_)) {
    if (r == 0) throw std::invalid_argument("order r must be >= 1");
}

namespace {

std::mutex carlitz_mutex;
std::vector<RationalFunction> carlitz_cache{RationalFunction(1)};

std::mutex higher_mutex;
std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, RationalFunction> higher_cache;

RationalFunction q_pow(std::size_t k) { return RationalFunction::monomial(Rational(1), k); }

}  // namespace

RationalFunction carlitz_beta(std::size_t n) {
    std::lock_guard lock(carlitz_mutex);
    // beta_m (q^{m+1} - 1) = [m = 1] - sum_{k<m} C(m,k) q^{k+1} beta_k
    while (carlitz_cache.size() <= n) {
        const std::size_t m = carlitz_cache.size();
        std::vector<RationalFunction> terms;
        terms.push_back(RationalFunction(m == 1 ? 1 : 0));
        for (std::size_t k = 0; k < m; ++k) {
            terms.push_back(-(RationalFunction(Rational(binomial(m, k))) * q_pow(k + 1) * carlitz_cache[k]));
        }
        const RationalFunction rhs = sum(terms);
        const RationalFunction coeff = q_pow(m + 1) - RationalFunction(1);
        carlitz_cache.push_back(rhs / coeff);
    }
    return carlitz_cache[n];
}

RationalFunction carlitz_beta_poly(std::size_t n, const QExponentArg& x) {
    const std::size_t w = x.w();
    const RationalFunction bracket = q_number(x);
    std::vector<RationalFunction> terms;
    for (std::size_t l = 0; l <= n; ++l) {
        terms.push_back(RationalFunction(Rational(binomial(n, l))) * bracket.pow(static_cast<long>(n - l)) *
                        q_pow(l * x.e()) * carlitz_beta(l).substitute_power(w));
    }
    return sum(terms);
}

RationalFunction higher_beta(std::size_t n, std::size_t r, const QExponentArg& x) {
    if (r == 0) throw std::invalid_argument("order r must be >= 1");
    const auto key = std::make_tuple(n, r, x.e(), x.w());
    {
        std::lock_guard lock(higher_mutex);
        if (auto it = higher_cache.find(key); it != higher_cache.end()) return it->second;
    }
    const std::size_t w = x.w();
    std::vector<RationalFunction> terms;
    for (std::size_t l = 0; l <= n; ++l) {
        // integral of Q^{ly} d mu_Q(y) = (l+1)/[l+1]_Q
        const RationalFunction moment =
            RationalFunction(Rational(static_cast<long>(l + 1))) / RationalFunction(q_integer(l + 1, w));
        RationalFunction term = RationalFunction(Rational(binomial(n, l))) * q_pow(l * x.e()) *
                                moment.pow(static_cast<long>(r));
        terms.push_back(l % 2 == 0 ? term : -term);
    }
    const RationalFunction one_minus_q(PolynomialZ(std::vector<Integer>{Integer(1)}) -
                                       PolynomialZ::monomial(Integer(1), w));
    RationalFunction value = sum(terms) * one_minus_q.pow(-static_cast<long>(n));
    std::lock_guard lock(higher_mutex);
    return higher_cache.emplace(key, std::move(value)).first->second;
}

LambdaPolynomial degenerate_combine(std::span<const Integer> stirling_row, const RationalFunction& c,
                                    std::span<const RationalFunction> moments) {
    if (stirling_row.empty() || moments.size() < stirling_row.size()) {
        throw std::invalid_argument("degenerate_combine: need one moment per Stirling coefficient");
    }
    const std::size_t n = stirling_row.size() - 1;
    std::vector<RationalFunction> coeffs(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        if (sgn(stirling_row[l]) == 0) continue;
        coeffs[n - l] = RationalFunction(Rational(stirling_row[l])) * c.pow(static_cast<long>(n - l)) * moments[l];
    }
    return LambdaPolynomial(std::move(coeffs));
}

LambdaPolynomial degenerate_higher_beta(const QBernParams& p) {
    const auto row = falling_factorial_expand(p.n);
    std::vector<RationalFunction> moments;
    moments.reserve(p.n + 1);
    for (std::size_t l = 0; l <= p.n; ++l) moments.push_back(higher_beta(l, p.r, p.x));
    return degenerate_combine(row, p.lam.scale, moments);
}

}  // namespace qbern
