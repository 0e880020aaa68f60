#include "qbern/lambda_polynomial.hpp"

namespace qbern {

RationalLambdaPolynomial limit_at_q1(const LambdaPolynomial& f) {
    return f.map([](const RationalFunction& c) { return limit_at_q1(c); });
}

RationalLambdaPolynomial eval_at(const LambdaPolynomial& f, const Rational& q0) {
    return f.map([&](const RationalFunction& c) { return eval_at(c, q0); });
}

RationalFunction at_lambda(const LambdaPolynomial& f, const RationalFunction& value) {
    return f.evaluate(value);
}

std::string to_string(const LambdaPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k].is_zero()) continue;
        if (!out.empty()) out += "+";
        out += to_string(f[k]);
        if (k >= 1) out += "*L";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace qbern
