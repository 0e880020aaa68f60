#include "qbern/rational_function.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qbern {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

// Primes below 2^31, so products of two residues fit in 64 bits.
const std::vector<u64>& modular_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        for (u64 c = (u64{1} << 31) - 1; out.size() < 512; c -= 2) {
            bool prime = true;
            for (u64 d = 3; d * d <= c; d += 2) {
                if (c % d == 0) {
                    prime = false;
                    break;
                }
            }
            if (prime) out.push_back(c);
        }
        return out;
    }();
    return primes;
}

u64 pow_mod(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const PolynomialZ& a, u64 p) {
    ModPoly out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = mpz_fdiv_ui(a[k].get_mpz_t(), p);
    trim(out);
    return out;
}

// a <- a mod b, b nonzero.
void rem_in_place(ModPoly& a, const ModPoly& b, u64 p) {
    const std::size_t db = b.size() - 1;
    const u64 inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const u64 f = a.back() * inv % p;
        const std::size_t off = a.size() - b.size();
        for (std::size_t k = 0; k <= db; ++k) {
            a[off + k] = (a[off + k] + p - f * b[k] % p) % p;
        }
        trim(a);
    }
}

ModPoly monic_gcd(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        rem_in_place(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

PolynomialZ drop_low(const PolynomialZ& a, std::size_t k) {
    if (k == 0) return a;
    const auto& c = a.coefficients();
    return PolynomialZ(std::vector<Integer>(c.begin() + static_cast<long>(k), c.end()));
}

PolynomialZ q_power(std::size_t v) { return PolynomialZ::monomial(Integer(1), v); }

PolynomialZ divide_by_scalar(const PolynomialZ& a, const Integer& s) {
    if (s == 1) return a;
    std::vector<Integer> v(a.coefficients());
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    return PolynomialZ(std::move(v));
}

PolynomialZ modular_gcd(const PolynomialZ& a, const PolynomialZ& b) {
    // a, b primitive, nonconstant, nonzero constant terms.
    const Integer lca = a.lead();
    const Integer lcb = b.lead();
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), lca.get_mpz_t(), lcb.get_mpz_t());

    std::vector<Integer> acc;
    Integer modulus;
    long acc_degree = -1;

    for (const u64 p : modular_primes()) {
        if (mpz_fdiv_ui(lca.get_mpz_t(), p) == 0 || mpz_fdiv_ui(lcb.get_mpz_t(), p) == 0) continue;
        const ModPoly g = monic_gcd(reduce(a, p), reduce(b, p), p);
        const long dg = static_cast<long>(g.size()) - 1;
        if (dg == 0) return PolynomialZ(Integer(1));
        if (acc_degree >= 0 && dg > acc_degree) continue;  // unlucky prime
        const u64 gp = mpz_fdiv_ui(gamma.get_mpz_t(), p);

        if (acc_degree < 0 || dg < acc_degree) {
            acc.assign(g.size(), Integer(0));
            modulus = Integer(static_cast<unsigned long>(p));
            const Integer half = modulus / 2;
            for (std::size_t k = 0; k < g.size(); ++k) {
                acc[k] = Integer(static_cast<unsigned long>(g[k] * gp % p));
                if (acc[k] > half) acc[k] -= modulus;
            }
            acc_degree = dg;
            continue;
        }

        const u64 minv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        bool stable = true;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const u64 target = g[k] * gp % p;
            const u64 have = mpz_fdiv_ui(acc[k].get_mpz_t(), p);
            const u64 delta = (target + p - have) % p * minv % p;
            if (delta != 0) {
                stable = false;
                mpz_addmul_ui(acc[k].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(delta));
            }
        }
        modulus *= static_cast<unsigned long>(p);
        // Keep the symmetric representative so that a settled coefficient stops moving.
        const Integer half = modulus / 2;
        for (auto& c : acc) {
            if (c > half) c -= modulus;
            else if (c < -half) c += modulus;
        }
        if (!stable) continue;

        PolynomialZ candidate = primitive_part(PolynomialZ(acc));
        if (exact_quotient(a, candidate) && exact_quotient(b, candidate)) return candidate;
    }
    throw std::runtime_error("modular gcd: prime table exhausted");
}

}  // namespace

Integer content(const PolynomialZ& p) {
    Integer g(0);
    for (const auto& c : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

PolynomialZ primitive_part(const PolynomialZ& p) {
    if (p.is_zero()) return p;
    PolynomialZ out = divide_by_scalar(p, content(p));
    if (sgn(out.lead()) < 0) out = -out;
    return out;
}

PolynomialZ gcd(const PolynomialZ& a, const PolynomialZ& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    const std::size_t v = std::min(va, vb);
    const PolynomialZ ra = drop_low(a, va);
    const PolynomialZ rb = drop_low(b, vb);
    if (ra.degree() == 0 || rb.degree() == 0) return q_power(v);
    if (ra == rb) return primitive_part(ra).shifted(v);
    return modular_gcd(primitive_part(ra), primitive_part(rb)).shifted(v);
}

std::optional<PolynomialZ> exact_quotient(const PolynomialZ& a, const PolynomialZ& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero()) return PolynomialZ{};
    if (a.degree() < b.degree()) return std::nullopt;
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Integer> r(a.coefficients());
    std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const mpz_srcptr lb = b.lead().get_mpz_t();
    for (std::size_t i = quo.size(); i-- > 0;) {
        Integer& top = r[i + db];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb)) return std::nullopt;
        mpz_divexact(quo[i].get_mpz_t(), top.get_mpz_t(), lb);
        for (std::size_t k = 0; k <= db; ++k) {
            mpz_submul(r[i + k].get_mpz_t(), quo[i].get_mpz_t(), b[k].get_mpz_t());
        }
    }
    for (std::size_t k = 0; k < db; ++k) {
        if (sgn(r[k]) != 0) return std::nullopt;
    }
    return PolynomialZ(std::move(quo));
}

std::pair<PolynomialZ, Integer> clear_denominators(const PolynomialQ& p) {
    Integer l(1);
    for (const auto& c : p.coefficients()) {
        const Integer d = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> v;
    v.reserve(p.size());
    for (const auto& c : p.coefficients()) v.push_back(c.num() * (l / c.den()));
    return {PolynomialZ(std::move(v)), l};
}

RationalFunction::RationalFunction(const Rational& v) : num_(v.num()), den_(v.den()) {}

RationalFunction RationalFunction::from_coprime(PolynomialZ n, PolynomialZ d) {
    if (d.is_zero()) throw DomainError("rational function with zero denominator");
    if (n.is_zero()) return RationalFunction();
    Integer c = content(d);
    const Integer cn = content(n);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
    if (sgn(d.lead()) < 0) c = -c;
    return RationalFunction(divide_by_scalar(n, c), divide_by_scalar(d, c), Canonical{});
}

RationalFunction RationalFunction::normalize(PolynomialZ num, PolynomialZ den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) return RationalFunction();
    const PolynomialZ g = gcd(num, den);
    if (g.degree() > 0) {
        num = *exact_quotient(num, g);
        den = *exact_quotient(den, g);
    }
    return from_coprime(std::move(num), std::move(den));
}

RationalFunction RationalFunction::normalize(const PolynomialQ& num, const PolynomialQ& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    auto [n, sn] = clear_denominators(num);
    auto [d, sd] = clear_denominators(den);
    // num/den = (n / sn) / (d / sd) = (n * sd) / (d * sn)
    return normalize(n.scaled(sd), d.scaled(sn));
}

RationalFunction RationalFunction::monomial(const Rational& c, std::size_t k) {
    return RationalFunction(PolynomialZ::monomial(c.num(), k), PolynomialZ(c.den()), Canonical{});
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
    const PolynomialZ g = gcd(den_, o.den_);
    if (g.degree() <= 0) {
        return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    const PolynomialZ mine = *exact_quotient(den_, g);
    const PolynomialZ theirs = *exact_quotient(o.den_, g);
    return *this = normalize(num_ * theirs + o.num_ * mine, mine * o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    PolynomialZ a = num_;
    PolynomialZ b = den_;
    PolynomialZ c = o.num_;
    PolynomialZ d = o.den_;
    const PolynomialZ g1 = gcd(a, d);
    if (g1.degree() > 0) {
        a = *exact_quotient(a, g1);
        d = *exact_quotient(d, g1);
    }
    const PolynomialZ g2 = gcd(c, b);
    if (g2.degree() > 0) {
        c = *exact_quotient(c, g2);
        b = *exact_quotient(b, g2);
    }
    return *this = from_coprime(a * c, b * d);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DomainError("rational function division by zero");
    return from_coprime(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return RationalFunction(1);
    // Powers of coprime polynomials stay coprime; contents stay coprime too.
    return from_coprime(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)));
}

RationalFunction RationalFunction::substitute_power(std::size_t w) const {
    return RationalFunction(num_.substitute_power(w), den_.substitute_power(w), Canonical{});
}

RationalFunction sum(std::span<const RationalFunction> terms) {
    std::vector<const RationalFunction*> live;
    for (const auto& t : terms) {
        if (!t.is_zero()) live.push_back(&t);
    }
    if (live.empty()) return RationalFunction();
    if (live.size() == 1) return *live.front();

    PolynomialZ common = live.front()->den();
    for (std::size_t k = 1; k < live.size(); ++k) {
        const PolynomialZ& d = live[k]->den();
        if (d == common || exact_quotient(common, d)) continue;
        const PolynomialZ g = gcd(common, d);
        common = common * (g.degree() > 0 ? *exact_quotient(d, g) : d);
    }
    PolynomialZ numer;
    for (const auto* t : live) {
        if (t->den() == common) {
            numer += t->num();
        } else {
            numer += t->num() * *exact_quotient(common, t->den());
        }
    }
    return RationalFunction::normalize(std::move(numer), std::move(common));
}

Rational limit_at_q1(const RationalFunction& f) {
    PolynomialZ n = f.num();
    PolynomialZ d = f.den();
    const PolynomialZ q_minus_1(std::vector<Integer>{Integer(-1), Integer(1)});
    auto at_one = [](const PolynomialZ& p) {
        Integer s(0);
        for (const auto& c : p.coefficients()) s += c;
        return s;
    };
    while (!n.is_zero() && sgn(at_one(n)) == 0 && sgn(at_one(d)) == 0) {
        n = *exact_quotient(n, q_minus_1);
        d = *exact_quotient(d, q_minus_1);
    }
    const Integer dv = at_one(d);
    if (sgn(dv) == 0) throw DomainError("pole at q = 1");
    return Rational(at_one(n), dv);
}

Rational eval_at(const RationalFunction& f, const Rational& q0) {
    const Rational dv = f.den().evaluate(q0);
    if (dv.is_zero()) throw DomainError("pole at q = " + q0.str());
    return f.num().evaluate(q0) / dv;
}

std::string to_string(const RationalFunction& f) {
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace qbern
