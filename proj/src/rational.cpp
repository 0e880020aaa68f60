#include "qbern/rational.hpp"

#include <cctype>

namespace qbern {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const Integer& n, const Integer& d) {
    if (sgn(d) == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    Integer n;
    Integer d(1);
    if (!parse_integer(text.substr(0, slash), n)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (slash != std::string_view::npos) {
        const auto tail = text.substr(slash + 1);
        if (tail.empty() || tail[0] == '-' || tail[0] == '+' || !parse_integer(tail, d)) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw DomainError("zero raised to a negative power");
        return inverse().pow(-e);
    }
    Integer n;
    Integer d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace qbern
