#pragma once

// Polynomials in the degenerate parameter lambda over rational functions in q.

#include <string>

#include "qbern/rational_function.hpp"

namespace qbern {

using LambdaPolynomial = Polynomial<RationalFunction, 'L'>;

/// Coefficient-wise lim_{q->1}.
RationalLambdaPolynomial limit_at_q1(const LambdaPolynomial& f);

/// Coefficient-wise evaluation at q = q0.
RationalLambdaPolynomial eval_at(const LambdaPolynomial& f, const Rational& q0);

/// Value at lambda = value (value = 0 yields the constant coefficient).
RationalFunction at_lambda(const LambdaPolynomial& f, const RationalFunction& value);

/// Canonical text "c0+c1*L+c2*L^2" with every c_k in "(num)/(den)" form; "0" for zero.
std::string to_string(const LambdaPolynomial& f);

}  // namespace qbern
