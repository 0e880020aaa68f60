#include "qbern/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qbern/qbernoulli.hpp"
#include "qbern/series.hpp"

namespace qbern::verify {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 11> kNames{{
    {IdentityId::thm2, "thm2"},
    {IdentityId::thm3, "thm3"},
    {IdentityId::cor_lambda0, "cor_lambda0"},
    {IdentityId::eq31, "eq31"},
    {IdentityId::dist_formula, "dist_formula"},
    {IdentityId::eq29, "eq29"},
    {IdentityId::eq17, "eq17"},
    {IdentityId::eq24_expand, "eq24_expand"},
    {IdentityId::finite_sym, "finite_sym"},
    {IdentityId::thm3_corrected, "thm3_corrected"},
    {IdentityId::cor_lambda0_corrected, "cor_lambda0_corrected"},
}};

RationalFunction q_pow(std::size_t k) { return RationalFunction::monomial(Rational(1), k); }

RationalFunction bracket(std::size_t w) { return q_number(QExponentArg(w, 1)); }

RationalFunction integer_rf(const Integer& v) { return RationalFunction(Rational(v)); }

// counts[s] = #{ j in [0,a)^r : j_1 + ... + j_r = s }
std::vector<Integer> tuple_sum_counts(std::size_t r, std::size_t a) {
    std::vector<Integer> counts{Integer(1)};
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<Integer> next(counts.size() + a - 1, Integer(0));
        for (std::size_t s = 0; s < counts.size(); ++s) {
            for (std::size_t j = 0; j < a; ++j) next[s + j] += counts[s];
        }
        counts = std::move(next);
    }
    return counts;
}

std::vector<Integer> stirling_row(std::size_t n, Fault fault) {
    auto row = falling_factorial_expand(n);
    if (fault == Fault::stirling_lhs && n >= 1) row[n - 1] += 1;
    return row;
}

LambdaPolynomial sum_lambda(const std::vector<LambdaPolynomial>& parts) {
    std::size_t width = 0;
    for (const auto& p : parts) width = std::max(width, p.size());
    std::vector<RationalFunction> coeffs;
    for (std::size_t k = 0; k < width; ++k) {
        std::vector<RationalFunction> terms;
        for (const auto& p : parts) {
            if (k < p.size()) terms.push_back(p[k]);
        }
        coeffs.push_back(sum(terms));
    }
    return LambdaPolynomial(std::move(coeffs));
}

std::string xlambda_string(const XLambdaPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k].is_zero()) continue;
        if (!out.empty()) out += "+";
        out += "(" + to_string(f[k]) + ")";
        if (k >= 1) out += "*L";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

template <class T>
IdentityReport make_report(IdentityId id, const Params& p, const T& lhs, const T& rhs, std::string lhs_text,
                           std::string rhs_text, std::chrono::steady_clock::time_point start) {
    const auto stop = std::chrono::steady_clock::now();
    return IdentityReport{id,
                          p,
                          lhs == rhs,
                          std::move(lhs_text),
                          std::move(rhs_text),
                          std::chrono::duration<double, std::milli>(stop - start).count()};
}

void require_positive(const Params& p) {
    if (p.r == 0 || p.w1 == 0 || p.w2 == 0) throw std::invalid_argument("r, w1 and w2 must be >= 1");
}

}  // namespace

std::string_view to_string(IdentityId id) {
    for (const auto& [key, name] : kNames) {
        if (key == id) return name;
    }
    return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
    for (const auto& [key, text] : kNames) {
        if (text == name) return key;
    }
    return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> out;
        for (const auto& entry : kNames) out.push_back(entry.first);
        return out;
    }();
    return ids;
}

LambdaPolynomial thm2_side(std::size_t n, std::size_t r, std::size_t a, std::size_t b, std::size_t x, Fault fault) {
    const auto counts = tuple_sum_counts(r, a);
    const LambdaScaling scaling = LambdaScaling::over_q_number(a);
    const auto row = stirling_row(n, fault);
    std::vector<LambdaPolynomial> parts;
    // Tuples j with equal |j| give the same summand; they are counted once with multiplicity.
    for (std::size_t s = 0; s < counts.size(); ++s) {
        const QExponentArg arg(a * b * x + b * s, a);
        LambdaPolynomial beta;
        if (fault == Fault::none) {
            beta = degenerate_higher_beta(QBernParams(n, r, arg, scaling));
        } else {
            std::vector<RationalFunction> moments;
            for (std::size_t l = 0; l <= n; ++l) moments.push_back(higher_beta(l, r, arg));
            beta = degenerate_combine(row, scaling.scale, moments);
        }
        parts.push_back(beta.scaled(integer_rf(counts[s]) * q_pow(b * s)));
    }
    return sum_lambda(parts).scaled(bracket(a).pow(static_cast<long>(n) - static_cast<long>(r)));
}

LambdaPolynomial thm3_side(std::size_t n, std::size_t r, std::size_t a, std::size_t b, std::size_t x, bool corrected,
                           Fault fault) {
    const auto row = stirling_row(n, fault);
    const RationalFunction wa = bracket(a);
    const RationalFunction wb = bracket(b);
    const QExponentArg arg(a * b * x, a);
    std::vector<RationalFunction> coeffs(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        if (sgn(row[l]) == 0) continue;
        std::vector<RationalFunction> terms;
        for (std::size_t i = 0; i <= l; ++i) {
            const long expo = (corrected ? 0L : static_cast<long>(n)) + static_cast<long>(l) - static_cast<long>(r) -
                              static_cast<long>(i);
            terms.push_back(integer_rf(binomial(l, i) * row[l]) * wa.pow(expo) * wb.pow(static_cast<long>(i)) *
                            higher_beta(l - i, r, arg) * t_sum(l + 1, i, r, a, b));
        }
        coeffs[n - l] = sum(terms);
    }
    return LambdaPolynomial(std::move(coeffs));
}

RationalFunction cor_lambda0_side(std::size_t n, std::size_t r, std::size_t a, std::size_t b, std::size_t x,
                                  bool corrected) {
    const RationalFunction wa = bracket(a);
    const RationalFunction wb = bracket(b);
    const QExponentArg arg(a * b * x, a);
    std::vector<RationalFunction> terms;
    for (std::size_t i = 0; i <= n; ++i) {
        const long expo = (corrected ? 1L : 2L) * static_cast<long>(n) - static_cast<long>(r) - static_cast<long>(i);
        terms.push_back(integer_rf(binomial(n, i)) * wa.pow(expo) * wb.pow(static_cast<long>(i)) *
                        higher_beta(n - i, r, arg) * t_sum(n + 1, i, r, a, b));
    }
    return sum(terms);
}

RationalFunction distribution_side(std::size_t n, std::size_t r, std::size_t w, std::size_t x) {
    const auto counts = tuple_sum_counts(r, w);
    std::vector<RationalFunction> terms;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        terms.push_back(integer_rf(counts[s]) * q_pow(s) * higher_beta(n, r, QExponentArg(w * x + s, w)));
    }
    return sum(terms) * bracket(w).pow(static_cast<long>(n) - static_cast<long>(r));
}

IdentityReport verify_thm2(const Params& p, const Options& opt) {
    require_positive(p);
    const auto start = std::chrono::steady_clock::now();
    const auto lhs = thm2_side(p.n, p.r, p.w1, p.w2, p.x, opt.fault);
    const auto rhs = thm2_side(p.n, p.r, p.w2, p.w1, p.x);
    return make_report(IdentityId::thm2, p, lhs, rhs, to_string(lhs), to_string(rhs), start);
}

namespace {

IdentityReport thm3_report(IdentityId id, const Params& p, const Options& opt, bool corrected) {
    require_positive(p);
    const auto start = std::chrono::steady_clock::now();
    const auto lhs = thm3_side(p.n, p.r, p.w1, p.w2, p.x, corrected, opt.fault);
    const auto rhs = thm3_side(p.n, p.r, p.w2, p.w1, p.x, corrected);
    return make_report(id, p, lhs, rhs, to_string(lhs), to_string(rhs), start);
}

IdentityReport cor_report(IdentityId id, const Params& p, bool corrected) {
    require_positive(p);
    const auto start = std::chrono::steady_clock::now();
    const auto lhs = cor_lambda0_side(p.n, p.r, p.w1, p.w2, p.x, corrected);
    const auto rhs = cor_lambda0_side(p.n, p.r, p.w2, p.w1, p.x, corrected);
    return make_report(id, p, lhs, rhs, to_string(lhs), to_string(rhs), start);
}

}  // namespace

IdentityReport verify_thm3(const Params& p, const Options& opt) {
    return thm3_report(IdentityId::thm3, p, opt, false);
}

IdentityReport verify_thm3_corrected(const Params& p, const Options& opt) {
    return thm3_report(IdentityId::thm3_corrected, p, opt, true);
}

IdentityReport verify_cor_lambda0(const Params& p, const Options&) { return cor_report(IdentityId::cor_lambda0, p, false); }

IdentityReport verify_cor_lambda0_corrected(const Params& p, const Options&) {
    return cor_report(IdentityId::cor_lambda0_corrected, p, true);
}

IdentityReport verify_eq31(const Params& p, const Options& opt) {
    require_positive(p);
    const auto start = std::chrono::steady_clock::now();
    const auto lhs = thm2_side(p.n, p.r, p.w1, 1, p.x, opt.fault);
    const auto rhs = degenerate_higher_beta(QBernParams(p.n, p.r, QExponentArg(p.w1 * p.x, 1)));
    return make_report(IdentityId::eq31, p, lhs, rhs, to_string(lhs), to_string(rhs), start);
}

IdentityReport verify_dist_formula(const Params& p, const Options&) {
    require_positive(p);
    const auto start = std::chrono::steady_clock::now();
    const auto lhs = higher_beta(p.n, p.r, QExponentArg(p.w1 * p.x, 1));
    const auto rhs = distribution_side(p.n, p.r, p.w1, p.x);
    return make_report(IdentityId::dist_formula, p, lhs, rhs, to_string(lhs), to_string(rhs), start);
}

IdentityReport verify_eq29(const Params& p, const Options&) {
    require_positive(p);
    if (p.j.size() != p.y.size()) throw std::invalid_argument("eq29 needs as many j values as y values");
    const auto start = std::chrono::steady_clock::now();
    std::size_t sj = 0;
    std::size_t sy = 0;
    for (const auto v : p.j) sj += v;
    for (const auto v : p.y) sy += v;
    const auto lhs = q_number(QExponentArg(p.w1 * p.w2 * p.x + p.w2 * sj + p.w1 * sy, 1));
    const Rational inner = Rational(static_cast<long>(p.w2 * p.x)) +
                           Rational(static_cast<long>(p.w2)) / Rational(static_cast<long>(p.w1)) *
                               Rational(static_cast<long>(sj)) +
                           Rational(static_cast<long>(sy));
    const auto rhs = bracket(p.w1) * q_number(QExponentArg::from_rational(inner, p.w1));
    return make_report(IdentityId::eq29, p, lhs, rhs, to_string(lhs), to_string(rhs), start);
}

IdentityReport verify_eq17(const Params& p, const Options&) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = p.n;
    if (p.symbolic_x) {
        const auto lhs = degenerate_bernoulli_carlitz_symbolic(n);
        XLambdaPolynomial rhs;
        for (std::size_t l = 0; l <= n; ++l) {
            const XLambdaPolynomial factor = XLambdaPolynomial::monomial(
                XPolynomial(Rational(binomial(n, l)) * bernoulli_second_kind(l)), l);
            rhs += factor * degenerate_bernoulli_kim_symbolic(n - l);
        }
        return make_report(IdentityId::eq17, p, lhs, rhs, xlambda_string(lhs), xlambda_string(rhs), start);
    }
    const Rational x(static_cast<long>(p.x));
    const auto lhs = degenerate_bernoulli_carlitz(n, x);
    RationalLambdaPolynomial rhs;
    for (std::size_t l = 0; l <= n; ++l) {
        const auto factor = RationalLambdaPolynomial::monomial(Rational(binomial(n, l)) * bernoulli_second_kind(l), l);
        rhs += factor * degenerate_bernoulli_kim(n - l, x);
    }
    return make_report(IdentityId::eq17, p, lhs, rhs, to_string(lhs), to_string(rhs), start);
}

IdentityReport verify_eq24_expand(const Params& p, const Options&) {
    const auto start = std::chrono::steady_clock::now();
    const XLambdaPolynomial y(XPolynomial::variable());
    const XLambdaPolynomial lambda = XLambdaPolynomial::variable();
    XLambdaPolynomial lhs(Rational(1));
    for (std::size_t k = 0; k < p.n; ++k) lhs *= y - lambda * XLambdaPolynomial(Rational(static_cast<long>(k)));
    const auto row = falling_factorial_expand(p.n);
    XLambdaPolynomial rhs;
    for (std::size_t l = 0; l <= p.n; ++l) {
        rhs += XLambdaPolynomial::monomial(XPolynomial::monomial(Rational(row[l]), l), p.n - l);
    }
    return make_report(IdentityId::eq24_expand, p, lhs, rhs, xlambda_string(lhs), xlambda_string(rhs), start);
}

IdentityReport verify_finite_sym(const Params& p, const Options& opt) {
    require_positive(p);
    const auto start = std::chrono::steady_clock::now();
    const auto res = padic::finite_level_symmetry(p.n, p.r, p.w1, p.w2, p.x, opt.padic, opt.padic_level);
    return make_report(IdentityId::finite_sym, p, res.lhs, res.rhs, res.lhs.str(), res.rhs.str(), start);
}

IdentityReport verify(IdentityId id, const Params& p, const Options& opt) {
    switch (id) {
        case IdentityId::thm2: return verify_thm2(p, opt);
        case IdentityId::thm3: return verify_thm3(p, opt);
        case IdentityId::cor_lambda0: return verify_cor_lambda0(p, opt);
        case IdentityId::eq31: return verify_eq31(p, opt);
        case IdentityId::dist_formula: return verify_dist_formula(p, opt);
        case IdentityId::eq29: return verify_eq29(p, opt);
        case IdentityId::eq17: return verify_eq17(p, opt);
        case IdentityId::eq24_expand: return verify_eq24_expand(p, opt);
        case IdentityId::finite_sym: return verify_finite_sym(p, opt);
        case IdentityId::thm3_corrected: return verify_thm3_corrected(p, opt);
        case IdentityId::cor_lambda0_corrected: return verify_cor_lambda0_corrected(p, opt);
    }
    throw std::invalid_argument("unknown identity");
}

namespace {

void tuples(std::size_t r, std::size_t bound, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> t(r, 0);
    while (true) {
        visit(t);
        std::size_t k = 0;
        while (k < r && ++t[k] == bound) t[k++] = 0;
        if (k == r) return;
    }
}

Params point(std::size_t n, std::size_t r, std::size_t w1, std::size_t w2, std::size_t x) {
    Params p;
    p.n = n;
    p.r = r;
    p.w1 = w1;
    p.w2 = w2;
    p.x = x;
    return p;
}

}  // namespace

std::vector<Params> grid_points(IdentityId id, const GridBounds& b) {
    std::vector<Params> out;
    if (b.empty) return out;
    switch (id) {
        case IdentityId::eq24_expand:
            for (std::size_t n = 0; n <= b.n_max; ++n) out.push_back(point(n, 1, 1, 1, 0));
            break;
        case IdentityId::eq17:
            for (std::size_t n = 0; n <= b.n_max; ++n) {
                for (std::size_t x = 0; x <= b.x_max; ++x) out.push_back(point(n, 1, 1, 1, x));
            }
            break;
        case IdentityId::eq31:
        case IdentityId::dist_formula:
            for (std::size_t n = 0; n <= b.n_max; ++n)
                for (std::size_t r = 1; r <= b.r_max; ++r)
                    for (std::size_t w1 = 1; w1 <= b.w_max; ++w1)
                        for (std::size_t x = 0; x <= b.x_max; ++x)
                            out.push_back(point(n, r, w1, 1, x));
            break;
        case IdentityId::eq29:
            // j_l and y_l range over [0, x_max] like x.
            for (std::size_t r = 1; r <= b.r_max; ++r)
                for (std::size_t w1 = 1; w1 <= b.w_max; ++w1)
                    for (std::size_t w2 = 1; w2 <= b.w_max; ++w2)
                        for (std::size_t x = 0; x <= b.x_max; ++x)
                            tuples(r, b.x_max + 1, [&](const std::vector<std::size_t>& j) {
                                tuples(r, b.x_max + 1, [&](const std::vector<std::size_t>& y) {
                                    Params p = point(0, r, w1, w2, x);
                                    p.j = j;
                                    p.y = y;
                                    out.push_back(std::move(p));
                                });
                            });
            break;
        default:
            for (std::size_t n = 0; n <= b.n_max; ++n)
                for (std::size_t r = 1; r <= b.r_max; ++r)
                    for (std::size_t w1 = 1; w1 <= b.w_max; ++w1)
                        for (std::size_t w2 = 1; w2 <= b.w_max; ++w2)
                            for (std::size_t x = 0; x <= b.x_max; ++x)
                                out.push_back(point(n, r, w1, w2, x));
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

GridResult run_grid(IdentityId id, const GridBounds& bounds, unsigned jobs, const Options& opt) {
    const auto points = grid_points(id, bounds);
    if (points.size() > kMaxGridPoints) {
        throw padic::ResourceError("grid has " + std::to_string(points.size()) + " points, limit is " +
                                   std::to_string(kMaxGridPoints));
    }
    std::vector<std::optional<IdentityReport>> slots(points.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t k = next.fetch_add(1);
            if (k >= points.size()) return;
            try {
                slots[k] = verify(id, points[k], opt);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = points.size();
                return;
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    GridResult result;
    for (auto& slot : slots) {
        result.all_passed = result.all_passed && slot->passed;
        result.reports.push_back(std::move(*slot));
    }
    return result;
}

}  // namespace qbern::verify
