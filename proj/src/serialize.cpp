#include "qbern/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qbern {

namespace {

using nlohmann::ordered_json;

ordered_json report_json(const verify::IdentityReport& rep, bool timing) {
    ordered_json params;
    params["n"] = rep.params.n;
    params["r"] = rep.params.r;
    params["w1"] = rep.params.w1;
    params["w2"] = rep.params.w2;
    params["x"] = rep.params.x;
    if (rep.params.symbolic_x) params["symbolic_x"] = true;
    if (!rep.params.j.empty()) {
        params["j"] = rep.params.j;
        params["y"] = rep.params.y;
    }
    ordered_json out;
    out["identity"] = std::string(verify::to_string(rep.id));
    out["params"] = std::move(params);
    out["status"] = rep.passed ? "pass" : "fail";
    out["lhs"] = rep.lhs;
    out["rhs"] = rep.rhs;
    out["elapsed_ms"] = timing ? rep.elapsed_ms : 0.0;
    return out;
}

std::string csv_row(const verify::IdentityReport& rep, bool timing) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", timing ? rep.elapsed_ms : 0.0);
    const auto& p = rep.params;
    std::string row = std::string(verify::to_string(rep.id));
    for (const auto v : {p.n, p.r, p.w1, p.w2, p.x}) row += "," + std::to_string(v);
    row += rep.passed ? ",pass," : ",fail,";
    row += csv_field(rep.lhs) + "," + csv_field(rep.rhs) + "," + elapsed;
    return row;
}

[[noreturn]] void malformed(std::string_view what, std::string_view text) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
}

std::size_t read_digits(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos - start;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    return std::nullopt;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string serialize_report(const verify::IdentityReport& rep, Format fmt, bool timing) {
    if (fmt == Format::json) return report_json(rep, timing).dump();
    return csv_row(rep, timing);
}

std::string serialize_reports(const std::vector<verify::IdentityReport>& reps, Format fmt, bool timing) {
    if (fmt == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reps) arr.push_back(report_json(rep, timing));
        return arr.dump(2) + "\n";
    }
    std::string out = std::string(kReportCsvHeader) + "\n";
    for (const auto& rep : reps) out += csv_row(rep, timing) + "\n";
    return out;
}

PolynomialQ parse_q_polynomial(std::string_view text) {
    if (text.empty()) malformed("polynomial", text);
    PolynomialQ out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
        } else if (!first) {
            malformed("polynomial", text);
        }
        first = false;

        Rational coeff(1);
        bool has_coeff = false;
        const std::size_t coeff_start = pos;
        if (read_digits(text, pos) > 0) {
            has_coeff = true;
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                if (read_digits(text, pos) == 0) malformed("polynomial", text);
            }
            coeff = Rational::parse(text.substr(coeff_start, pos - coeff_start));
        }
        std::size_t power = 0;
        bool has_var = false;
        if (has_coeff && pos < text.size() && text[pos] == '*') {
            ++pos;
            if (pos >= text.size() || text[pos] != 'q') malformed("polynomial", text);
        }
        if (pos < text.size() && text[pos] == 'q') {
            has_var = true;
            ++pos;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                const std::size_t start = pos;
                if (read_digits(text, pos) == 0) malformed("polynomial", text);
                power = std::stoul(std::string(text.substr(start, pos - start)));
            }
        }
        if (!has_coeff && !has_var) malformed("polynomial", text);
        out += PolynomialQ::monomial(negative ? -coeff : coeff, power);
    }
    return out;
}

RationalFunction parse_rational_function(std::string_view text) {
    if (text.empty() || text.front() != '(') {
        return RationalFunction::normalize(parse_q_polynomial(text), PolynomialQ(Rational(1)));
    }
    const auto close = text.find(')');
    if (close == std::string_view::npos || text.substr(close, 3) != ")/(" || text.back() != ')') {
        malformed("rational function", text);
    }
    const auto num = text.substr(1, close - 1);
    const auto den = text.substr(close + 3, text.size() - close - 4);
    if (den.find_first_of("()") != std::string_view::npos) malformed("rational function", text);
    const PolynomialQ d = parse_q_polynomial(den);
    if (d.is_zero()) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return RationalFunction::normalize(parse_q_polynomial(num), d);
}

LambdaPolynomial parse_lambda_polynomial(std::string_view text) {
    if (text == "0") return LambdaPolynomial();
    LambdaPolynomial out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (pos > 0) {
            if (text[pos] != '+') malformed("lambda polynomial", text);
            ++pos;
        }
        // A coefficient spans "(num)/(den)".
        const auto first_close = text.find(')', pos);
        if (first_close == std::string_view::npos) malformed("lambda polynomial", text);
        const auto second_close = text.find(')', first_close + 1);
        if (second_close == std::string_view::npos) malformed("lambda polynomial", text);
        const RationalFunction coeff = parse_rational_function(text.substr(pos, second_close + 1 - pos));
        pos = second_close + 1;
        std::size_t power = 0;
        if (text.substr(pos, 2) == "*L") {
            pos += 2;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                const std::size_t start = pos;
                if (read_digits(text, pos) == 0) malformed("lambda polynomial", text);
                power = std::stoul(std::string(text.substr(start, pos - start)));
            }
        }
        out += LambdaPolynomial::monomial(coeff, power);
    }
    return out;
}

}  // namespace qbern
