#pragma once

// Canonical text forms of reports and the inverse parsers.
//
// Rational functions render as "(num)/(den)" with ascending powers of q and no
// whitespace, lambda-polynomials as "c0+c1*L+c2*L^2" with every ci in that form.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/lambda_polynomial.hpp"
#include "qbern/verify.hpp"

namespace qbern {

enum class Format { json, csv };

std::optional<Format> parse_format(std::string_view name);

inline constexpr std::string_view kReportCsvHeader = "identity,n,r,w1,w2,x,status,lhs,rhs,elapsed_ms";

/// With timing = false, elapsed_ms is written as 0 so that reports compare byte for byte.
std::string serialize_report(const verify::IdentityReport& rep, Format fmt, bool timing = true);

/// JSON array, or CSV header plus one row per report.
std::string serialize_reports(const std::vector<verify::IdentityReport>& reps, Format fmt, bool timing = true);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

/// Polynomial in q with rational coefficients, e.g. "1-q+2*q^3" or "-1/2*q".
PolynomialQ parse_q_polynomial(std::string_view text);

/// "(num)/(den)" or a bare polynomial; the result is normalized.
RationalFunction parse_rational_function(std::string_view text);

LambdaPolynomial parse_lambda_polynomial(std::string_view text);

}  // namespace qbern
