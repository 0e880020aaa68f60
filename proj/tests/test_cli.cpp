#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qbern/cli.hpp"
#include "qbern/qbernoulli.hpp"
#include "qbern/serialize.hpp"
#include "support.hpp"

using namespace qbern;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("table of carlitz numbers as csv") {
    const auto r = run({"table", "--family", "carlitz-beta", "--n-max", "4", "--format", "csv"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "family,n,r,x,w,value");
    CHECK(rows[1] == "carlitz-beta,0,1,0,1,(1)/(1)");
    CHECK(rows[2] == "carlitz-beta,1,1,0,1,(-1)/(1+q)");
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto value = rows[n + 1].substr(rows[n + 1].rfind(',') + 1);
        CHECK(parse_rational_function(value) == carlitz_beta(n));
    }
}

TEST_CASE("tables with a numeric lambda") {
    const auto sym = run({"table", "--family", "degenerate-bernoulli", "--n-max", "3", "--format", "json"});
    CHECK(sym.code == 0);
    const auto js = nlohmann::json::parse(sym.out);
    CHECK(js.size() == 4);
    CHECK(js[3]["value"] == "-1/2*L-L^2");

    const auto num = run({"table", "--family", "degenerate-bernoulli", "--n-max", "3", "--lambda", "2", "--format", "json"});
    CHECK(nlohmann::json::parse(num.out)[3]["value"] == "-5");

    const auto bad = run({"table", "--family", "degenerate-bernoulli", "--lambda", "1/0"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("table families all evaluate") {
    for (const auto& family : cli::table_families()) {
        const auto r = run({"table", "--family", family, "--n-max", "2", "--r-max", "2", "--w-max", "2", "--x-max", "1",
                            "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(lines(r.out).size() > 1);
    }
}

TEST_CASE("verify grid as json") {
    const auto r = run({"verify", "--identity", "thm2", "--n-max", "2", "--r-max", "1", "--w-max", "2", "--format", "json"});
    CHECK(r.code == 0);
    const auto js = nlohmann::ordered_json::parse(r.out);
    REQUIRE(js.is_array());
    CHECK(js.size() == 36);
    for (const auto& rep : js) {
        CHECK(rep["status"] == "pass");
        CHECK(rep["lhs"] == rep["rhs"]);
        CHECK(rep["identity"] == "thm2");
        CHECK(rep["params"].contains("w2"));
        CHECK(rep.contains("elapsed_ms"));
    }
    const auto first = js[0];
    std::vector<std::string> keys;
    for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"identity", "params", "status", "lhs", "rhs", "elapsed_ms"});
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"verify", "--identity", "thm2", "--n-max", "0", "--r-max", "0"}).code == 2);
    CHECK(run({"verify", "--identity", "nope"}).code == 2);
    CHECK(run({"verify", "--identity", "thm2", "--bogus"}).code == 2);
    CHECK(run({"verify", "--identity", "thm2", "--n-max", "-1"}).code == 2);
    CHECK(run({"verify", "--identity", "thm2", "--format", "xml"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"padic-check", "--p", "4"}).code == 2);
    CHECK(run({"padic-check", "--p", "2"}).code == 2);
    CHECK(run({"padic-check", "--q0", "2/x"}).code == 2);
    CHECK(run({"padic-check", "--q0", "2"}).code == 2);
    CHECK(run({"verify", "--identity", "thm2", "--n-max", "100", "--r-max", "10", "--w-max", "20", "--x-max", "10"}).code ==
          2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("failed identities exit with 1 and still emit reports") {
    const auto r = run({"verify", "--identity", "thm2", "--n-max", "2", "--r-max", "1", "--w-max", "2", "--x-max", "0",
                        "--inject-fault", "stirling-lhs", "--format", "csv"});
    CHECK(r.code == 1);
    const auto rows = lines(r.out);
    CHECK(rows[0] == kReportCsvHeader);
    bool saw_fail = false;
    for (std::size_t k = 1; k < rows.size(); ++k) saw_fail = saw_fail || rows[k].find(",fail,") != std::string::npos;
    CHECK(saw_fail);

    const auto thm3 = run({"verify", "--identity", "thm3", "--n-max", "1", "--r-max", "1", "--w-max", "2", "--x-max", "0"});
    CHECK(thm3.code == 1);
}

TEST_CASE("reports are byte identical across job counts") {
    const std::vector<std::string> base{"verify", "--identity", "thm2", "--n-max", "3", "--r-max", "2",
                                        "--w-max", "3", "--x-max", "1", "--no-timing"};
    auto with_jobs = [&](const std::string& jobs, const std::string& fmt) {
        auto args = base;
        args.insert(args.end(), {"--jobs", jobs, "--format", fmt});
        return run(args);
    };
    for (const std::string fmt : {"json", "csv"}) {
        const auto one = with_jobs("1", fmt);
        const auto eight = with_jobs("8", fmt);
        CHECK(one.code == 0);
        CHECK(one.out == eight.out);
    }
}

TEST_CASE("output file") {
    const std::string path = "qbern_cli_test_output.csv";
    const auto r = run({"table", "--family", "stirling1", "--n-max", "3", "--format", "csv", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().find("stirling1,3,1,0,1,2*x-3*x^2+x^3") != std::string::npos);
    std::remove(path.c_str());
    CHECK(run({"table", "--family", "stirling1", "--output", "/nonexistent-dir/out.csv"}).code == 2);
}

TEST_CASE("padic check") {
    const auto r = run({"padic-check", "--n-max", "1", "--r-max", "2", "--x-max", "1", "--format", "json"});
    CHECK(r.code == 0);
    const auto js = nlohmann::json::parse(r.out);
    for (const auto& row : js) {
        CHECK(row["status"] == "pass");
        CHECK(row["p"] == 3);
        CHECK(row["q0"] == "4");
    }
    const auto csv = run({"padic-check", "--n-max", "2", "--p", "5", "--q0", "1+p", "--lam0", "5", "--format", "csv",
                          "--r-max", "1", "--x-max", "0"});
    CHECK(lines(csv.out)[0] == "check,n,r,x,valuations,status");
    CHECK(csv.out.find("difference-eq,2,1,0,1;2;3;4,pass") != std::string::npos);
}

TEST_CASE("empty report lists") {
    CHECK(serialize_reports({}, Format::json) == "[]\n");
    CHECK(serialize_reports({}, Format::csv) == std::string(kReportCsvHeader) + "\n");
}

TEST_CASE("q0 shorthand") {
    CHECK(cli::parse_q0("1+p", 5) == Rational(6));
    CHECK(cli::parse_q0("7/2", 5) == Rational(Integer(7), Integer(2)));
    CHECK_THROWS_AS(cli::parse_q0("1+", 5), std::invalid_argument);
}

TEST_CASE("rational function parser round trip") {
    testing::Gen gen(0xbac);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto f = gen.rational_function();
        CHECK(parse_rational_function(to_string(f)) == f);
    }
    for (std::size_t n = 0; n <= 8; ++n) CHECK(parse_rational_function(to_string(carlitz_beta(n))) == carlitz_beta(n));
    CHECK(parse_rational_function("1+q") == RationalFunction(PolynomialZ(std::vector<Integer>{1, 1})));
    CHECK(parse_rational_function("(2*q)/(4)") == RationalFunction::normalize(PolynomialZ(std::vector<Integer>{0, 1}),
                                                                              PolynomialZ(std::vector<Integer>{2})));
    CHECK_THROWS_AS(parse_rational_function("(1)/(0)"), DomainError);
    for (const char* bad : {"", "(1+q", "(1)/(1", "1++q", "q^", "2*", "(1)/(q)x", "1 + q", "x"}) {
        CHECK_THROWS_AS(parse_rational_function(bad), std::invalid_argument);
    }
}

TEST_CASE("lambda polynomial parser round trip") {
    testing::Gen gen(0x1ab);
    for (int trial = 0; trial < 500; ++trial) {
        const auto f = gen.lambda_polynomial(3);
        CHECK(parse_lambda_polynomial(to_string(f)) == f);
    }
    CHECK(parse_lambda_polynomial("0").is_zero());
    CHECK_THROWS_AS(parse_lambda_polynomial("(1)/(1)*L^"), std::invalid_argument);
}

TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
