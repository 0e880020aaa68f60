#include "qbern/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbern/qbernoulli.hpp"
#include "qbern/serialize.hpp"
#include "qbern/series.hpp"
#include "qbern/verify.hpp"

namespace qbern::cli {

namespace {

using nlohmann::ordered_json;

struct TableRow {
    std::string family;
    std::size_t n, r, x, w;
    std::string value;
};

// Which of the axes r, x, w a family ranges over, and how it evaluates.
struct FamilySpec {
    std::string name;
    bool uses_r, uses_x, uses_w;
    std::function<std::string(std::size_t n, std::size_t r, std::size_t x, std::size_t w,
                              const std::optional<Rational>& lambda)>
        value;
};

std::string lambda_value(const RationalLambdaPolynomial& f, const std::optional<Rational>& lambda) {
    return lambda ? f.evaluate(*lambda).str() : to_string(f);
}

std::string lambda_value(const LambdaPolynomial& f, const std::optional<Rational>& lambda) {
    return lambda ? to_string(at_lambda(f, RationalFunction(*lambda))) : to_string(f);
}

Rational whole(std::size_t v) { return Rational(static_cast<long>(v)); }

const std::vector<FamilySpec>& families() {
    static const std::vector<FamilySpec> specs = {
        {"carlitz-beta", false, false, false,
         [](std::size_t n, std::size_t, std::size_t, std::size_t, const auto&) { return to_string(carlitz_beta(n)); }},
        {"carlitz-beta-poly", false, true, true,
         [](std::size_t n, std::size_t, std::size_t x, std::size_t w, const auto&) {
             return to_string(carlitz_beta_poly(n, QExponentArg(x * w, w)));
         }},
        {"higher-beta", true, true, true,
         [](std::size_t n, std::size_t r, std::size_t x, std::size_t w, const auto&) {
             return to_string(higher_beta(n, r, QExponentArg(x * w, w)));
         }},
        {"degenerate-higher-beta", true, true, true,
         [](std::size_t n, std::size_t r, std::size_t x, std::size_t w, const auto& lambda) {
             return lambda_value(degenerate_higher_beta(QBernParams(n, r, QExponentArg(x * w, w))), lambda);
         }},
        {"bernoulli", false, true, false,
         [](std::size_t n, std::size_t, std::size_t x, std::size_t, const auto&) {
             return classical_bernoulli(n, whole(x)).str();
         }},
        {"higher-bernoulli", true, true, false,
         [](std::size_t n, std::size_t r, std::size_t x, std::size_t, const auto&) {
             return higher_bernoulli(n, r, whole(x)).str();
         }},
        {"degenerate-bernoulli", false, true, false,
         [](std::size_t n, std::size_t, std::size_t x, std::size_t, const auto& lambda) {
             return lambda_value(degenerate_bernoulli_kim(n, whole(x)), lambda);
         }},
        {"degenerate-bernoulli-carlitz", false, true, false,
         [](std::size_t n, std::size_t, std::size_t x, std::size_t, const auto& lambda) {
             return lambda_value(degenerate_bernoulli_carlitz(n, whole(x)), lambda);
         }},
        {"higher-degenerate-bernoulli", true, true, false,
         [](std::size_t n, std::size_t r, std::size_t x, std::size_t, const auto& lambda) {
             return lambda_value(higher_degenerate_bernoulli(n, r, whole(x)), lambda);
         }},
        {"bernoulli-second-kind", false, false, false,
         [](std::size_t n, std::size_t, std::size_t, std::size_t, const auto&) {
             return bernoulli_second_kind(n).str();
         }},
        {"stirling1", false, false, false,
         [](std::size_t n, std::size_t, std::size_t, std::size_t, const auto&) {
             return to_string(Polynomial<Integer, 'x'>(falling_factorial_expand(n)));
         }},
    };
    return specs;
}

struct Bounds {
    std::size_t n_max = 6;
    std::size_t r_max = 1;
    std::size_t w_max = 1;
    std::size_t x_max = 0;
};

std::string table_text(const std::vector<TableRow>& rows, Format fmt) {
    if (fmt == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json o;
            o["family"] = row.family;
            o["n"] = row.n;
            o["r"] = row.r;
            o["x"] = row.x;
            o["w"] = row.w;
            o["value"] = row.value;
            arr.push_back(std::move(o));
        }
        return arr.dump(2) + "\n";
    }
    std::string out = "family,n,r,x,w,value\n";
    for (const auto& row : rows) {
        out += row.family + "," + std::to_string(row.n) + "," + std::to_string(row.r) + "," + std::to_string(row.x) +
               "," + std::to_string(row.w) + "," + csv_field(row.value) + "\n";
    }
    return out;
}

std::string valuation_text(const padic::Valuation& v) { return v.str(); }

std::string padic_text(const std::vector<PadicCheckRow>& rows, const padic::PadicContext& ctx, Format fmt) {
    if (fmt == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json o;
            o["check"] = row.check;
            o["n"] = row.n;
            o["r"] = row.r;
            o["x"] = row.x;
            o["p"] = ctx.p();
            o["q0"] = ctx.q0().str();
            o["lam0"] = ctx.lam0().str();
            ordered_json vals = ordered_json::array();
            for (const auto& v : row.valuations) {
                if (v.is_infinite()) vals.push_back("inf");
                else vals.push_back(v.value());
            }
            o["valuations"] = std::move(vals);
            o["status"] = row.passed ? "pass" : "fail";
            arr.push_back(std::move(o));
        }
        return arr.dump(2) + "\n";
    }
    std::string out = "check,n,r,x,valuations,status\n";
    for (const auto& row : rows) {
        std::string vals;
        for (const auto& v : row.valuations) vals += (vals.empty() ? "" : ";") + valuation_text(v);
        out += row.check + "," + std::to_string(row.n) + "," + std::to_string(row.r) + "," + std::to_string(row.x) +
               "," + vals + "," + (row.passed ? "pass" : "fail") + "\n";
    }
    return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    file << text;
    if (!file) throw std::invalid_argument("failed writing '" + path + "'");
}

Format format_of(const std::string& name) {
    const auto fmt = parse_format(name);
    if (!fmt) throw std::invalid_argument("unknown format '" + name + "'");
    return *fmt;
}

int run_table(const std::string& family, const Bounds& b, const std::string& lambda, Format fmt,
              const std::string& output, std::ostream& out) {
    const auto& specs = families();
    const auto it = std::find_if(specs.begin(), specs.end(), [&](const FamilySpec& s) { return s.name == family; });
    if (it == specs.end()) throw std::invalid_argument("unknown family '" + family + "'");
    std::optional<Rational> lam;
    if (lambda != "symbolic") lam = Rational::parse(lambda);

    std::vector<TableRow> rows;
    for (std::size_t n = 0; n <= b.n_max; ++n)
        for (std::size_t r = 1; r <= (it->uses_r ? b.r_max : 1); ++r)
            for (std::size_t x = 0; x <= (it->uses_x ? b.x_max : 0); ++x)
                for (std::size_t w = 1; w <= (it->uses_w ? b.w_max : 1); ++w)
                    rows.push_back({family, n, r, x, w, it->value(n, r, x, w, lam)});
    emit(table_text(rows, fmt), output, out);
    return kExitPass;
}

verify::Fault fault_of(const std::string& name) {
    if (name == "none") return verify::Fault::none;
    if (name == "stirling-lhs") return verify::Fault::stirling_lhs;
    throw std::invalid_argument("unknown fault '" + name + "'");
}

int run_verify(const std::string& identity, const Bounds& b, unsigned jobs, Format fmt, bool timing,
               const std::string& fault, const std::string& output, std::ostream& out) {
    std::vector<verify::IdentityId> ids;
    if (identity == "all") {
        ids = verify::all_identities();
    } else {
        const auto id = verify::parse_identity(identity);
        if (!id) throw std::invalid_argument("unknown identity '" + identity + "'");
        ids.push_back(*id);
    }
    verify::Options opt;
    opt.fault = fault_of(fault);
    const verify::GridBounds grid{b.n_max, b.r_max, b.w_max, b.x_max, false};
    std::vector<verify::IdentityReport> reports;
    bool all_passed = true;
    for (const auto id : ids) {
        auto result = verify::run_grid(id, grid, jobs, opt);
        all_passed = all_passed && result.all_passed;
        for (auto& rep : result.reports) reports.push_back(std::move(rep));
    }
    emit(serialize_reports(reports, fmt, timing), output, out);
    return all_passed ? kExitPass : kExitFail;
}

}  // namespace

const std::vector<std::string>& table_families() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : families()) out.push_back(s.name);
        return out;
    }();
    return names;
}

Rational parse_q0(std::string_view text, unsigned long p) {
    if (text == "1+p") return Rational(static_cast<long>(p + 1));
    return Rational::parse(text);
}

std::vector<PadicCheckRow> padic_checks(const padic::PadicContext& ctx, std::size_t n_max, std::size_t r_max,
                                        std::size_t x_max, std::size_t levels, std::size_t multi_levels) {
    using padic::Integrand;
    std::vector<PadicCheckRow> rows;
    const Rational& q0 = ctx.q0();
    const Rational& lam0 = ctx.lam0();
    auto add = [&](std::string check, std::size_t n, std::size_t r, std::size_t x,
                   const std::function<Rational(std::size_t)>& approx, const Rational& target) {
        const std::size_t top = r >= 2 ? std::min(levels, multi_levels) : levels;
        PadicCheckRow row{std::move(check), n, r, x, padic::valuation_sequence(approx, target, ctx.p(), 1, top), false};
        row.passed = padic::converges(row.valuations);
        rows.push_back(std::move(row));
    };

    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t x = 0; x <= x_max; ++x) {
            const Rational xr = whole(x);
            const PolynomialQ shifted = PolynomialQ(std::vector<Rational>{xr, Rational(1)}).pow(n);
            add("mu0-bernoulli", n, 1, x, [&](std::size_t N) { return padic::mu0_truncated(shifted, ctx, N); },
                classical_bernoulli(n, xr));
            add("muq-carlitz", n, 1, x,
                [&](std::size_t N) { return padic::multi_muq_truncated(n, 1, x, ctx, N, Integrand::plain_power); },
                eval_at(carlitz_beta_poly(n, QExponentArg(x, 1)), q0));
            for (std::size_t r = 2; r <= r_max; ++r) {
                add("muq-higher", n, r, x,
                    [&](std::size_t N) { return padic::multi_muq_truncated(n, r, x, ctx, N, Integrand::plain_power); },
                    eval_at(higher_beta(n, r, QExponentArg(x, 1)), q0));
                add("mu0-higher", n, r, x,
                    [&](std::size_t N) { return padic::multi_mu0_truncated(n, r, xr, ctx, N, Integrand::plain_power); },
                    higher_bernoulli(n, r, xr));
            }
            for (std::size_t r = 1; r <= r_max; ++r) {
                add("muq-degenerate", n, r, x,
                    [&](std::size_t N) {
                        return padic::multi_muq_truncated(n, r, x, ctx, N, Integrand::degenerate_falling);
                    },
                    eval_at(degenerate_higher_beta(QBernParams(n, r, QExponentArg(x, 1))), q0).evaluate(lam0));
                add("mu0-degenerate", n, r, x,
                    [&](std::size_t N) {
                        return padic::multi_mu0_truncated(n, r, xr, ctx, N, Integrand::degenerate_falling);
                    },
                    higher_degenerate_bernoulli(n, r, xr).evaluate(lam0));
            }
        }
        add("muq-moment", n, 1, 0, [&](std::size_t N) { return padic::muq_truncated_moment(n, ctx, N); },
            whole(n + 1) / ctx.q_number(n + 1));
        if (n >= 1) {
            const PolynomialQ power = PolynomialQ::monomial(Rational(1), n);
            PadicCheckRow row{"difference-eq", n, 1, 0, {}, false};
            for (std::size_t N = 1; N <= levels; ++N) row.valuations.push_back(padic::check_difference_eq(power, ctx, N));
            row.passed = padic::converges(row.valuations);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-Bernoulli tables, identity grids and p-adic oracle checks", "qbern"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output;

    Bounds table_bounds;
    std::string family;
    std::string lambda = "symbolic";
    auto* table = app.add_subcommand("table", "Tabulate a polynomial family");
    table->add_option("--family", family, "Family name")->required()->check(CLI::IsMember(table_families()));
    table->add_option("--n-max", table_bounds.n_max, "Largest degree n")->capture_default_str();
    table->add_option("--r-max", table_bounds.r_max, "Largest order r")->check(CLI::PositiveNumber)->capture_default_str();
    table->add_option("--w-max", table_bounds.w_max, "Largest base exponent w")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    table->add_option("--x-max", table_bounds.x_max, "Largest integral argument x")->capture_default_str();
    table->add_option("--lambda", lambda, "'symbolic' or a rational value a/b")->capture_default_str();

    Bounds verify_bounds{6, 3, 4, 2};
    std::string identity;
    unsigned jobs = 1;
    bool no_timing = false;
    std::string fault = "none";
    auto* verify_cmd = app.add_subcommand("verify", "Check an identity over a parameter grid");
    std::vector<std::string> identity_names{"all"};
    for (const auto id : verify::all_identities()) identity_names.emplace_back(verify::to_string(id));
    verify_cmd->add_option("--identity", identity, "Identity id or 'all'")
        ->required()
        ->check(CLI::IsMember(identity_names));
    verify_cmd->add_option("--n-max", verify_bounds.n_max, "Largest n")->capture_default_str();
    verify_cmd->add_option("--r-max", verify_bounds.r_max, "Largest r (>= 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--w-max", verify_bounds.w_max, "Largest w1, w2 (>= 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--x-max", verify_bounds.x_max, "Largest x")->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for reproducible output");
    verify_cmd->add_option("--inject-fault", fault, "Deliberate defect for testing the harness")
        ->check(CLI::IsMember({"none", "stirling-lhs"}))
        ->capture_default_str();

    Bounds padic_bounds{4, 2, 1, 2};
    unsigned long p = 3;
    std::string q0_text = "1+p";
    std::string lam0_text = "1";
    std::size_t levels = 4;
    std::size_t multi_levels = 3;
    auto* padic_cmd = app.add_subcommand("padic-check", "Compare truncated p-adic integrals with closed forms");
    padic_cmd->add_option("--p", p, "Odd prime")->capture_default_str();
    padic_cmd->add_option("--q0", q0_text, "q0 as a/b or 1+p")->capture_default_str();
    padic_cmd->add_option("--lam0", lam0_text, "Degenerate parameter value")->capture_default_str();
    padic_cmd->add_option("--n-max", padic_bounds.n_max, "Largest n")->capture_default_str();
    padic_cmd->add_option("--r-max", padic_bounds.r_max, "Largest r (>= 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    padic_cmd->add_option("--x-max", padic_bounds.x_max, "Largest x")->capture_default_str();
    padic_cmd->add_option("--levels", levels, "Truncation levels 1..N")->check(CLI::PositiveNumber)->capture_default_str();
    padic_cmd->add_option("--multi-levels", multi_levels, "Level cap for r >= 2")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    for (auto* sub : {table, verify_cmd, padic_cmd}) {
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
        sub->add_option("--output", output, "Output file (default: standard output)");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        const Format fmt = format_of(format);
        if (table->parsed()) return run_table(family, table_bounds, lambda, fmt, output, out);
        if (verify_cmd->parsed()) {
            return run_verify(identity, verify_bounds, jobs, fmt, !no_timing, fault, output, out);
        }
        const padic::PadicContext ctx(p, parse_q0(q0_text, p), std::max(levels, multi_levels), Rational::parse(lam0_text));
        const auto rows = padic_checks(ctx, padic_bounds.n_max, padic_bounds.r_max, padic_bounds.x_max, levels, multi_levels);
        emit(padic_text(rows, ctx, fmt), output, out);
        const bool ok = std::all_of(rows.begin(), rows.end(), [](const PadicCheckRow& r) { return r.passed; });
        return ok ? kExitPass : kExitFail;
    } catch (const padic::ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace qbern::cli
