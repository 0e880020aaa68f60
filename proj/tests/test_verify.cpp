#include "doctest.h"

#include "qbern/qbernoulli.hpp"
#include "qbern/verify.hpp"
#include "support.hpp"

using namespace qbern;
using namespace qbern::verify;

namespace {

Params at(std::size_t n, std::size_t r, std::size_t w1, std::size_t w2, std::size_t x) {
    Params p;
    p.n = n;
    p.r = r;
    p.w1 = w1;
    p.w2 = w2;
    p.x = x;
    return p;
}

LambdaPolynomial at_zero_lambda(const LambdaPolynomial& f) { return LambdaPolynomial(f.coeff(0)); }

// [a]^{n-r} sum over every tuple j in [0,a)^r of q^{b|j|} beta^{(r)}_{n,q^a}(b x + (b/a)|j|), no grouping.
RationalFunction symmetric_sum(std::size_t n, std::size_t r, std::size_t a, std::size_t b, std::size_t x) {
    std::vector<std::size_t> j(r, 0);
    std::vector<RationalFunction> terms;
    while (true) {
        std::size_t s = 0;
        for (const auto v : j) s += v;
        terms.push_back(RationalFunction::monomial(Rational(1), b * s) *
                        higher_beta(n, r, QExponentArg(a * b * x + b * s, a)));
        std::size_t k = 0;
        while (k < r && ++j[k] == a) j[k++] = 0;
        if (k == r) break;
    }
    return sum(terms) * testing::rf_poly(testing::geometric(a)).pow(static_cast<long>(n) - static_cast<long>(r));
}

}  // namespace

TEST_CASE("identity names round trip") {
    for (const auto id : all_identities()) CHECK(parse_identity(to_string(id)) == id);
    CHECK_FALSE(parse_identity("thm9").has_value());
}

TEST_CASE("symmetric instances pass") {
    for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t r = 1; r <= 2; ++r) {
            const auto rep = verify_thm2(at(n, r, 1, 1, 1));
            CHECK(rep.passed);
            const auto direct = degenerate_higher_beta(QBernParams(n, r, QExponentArg(1, 1)));
            CHECK(rep.lhs == to_string(direct));
            CHECK(verify_thm3(at(n, r, 2, 2, 1)).passed);
            CHECK(verify_cor_lambda0(at(n, r, 1, 1, 0)).passed);
        }
    }
}

TEST_CASE("symmetry instance with w2 = 1 matches the distribution identity") {
    const auto thm2 = verify_thm2(at(1, 1, 2, 1, 0));
    CHECK(thm2.passed);
    const auto eq31 = verify_eq31(at(1, 1, 2, 1, 0));
    CHECK(eq31.passed);
    CHECK(thm2.lhs == eq31.lhs);
}

TEST_CASE("degenerate symmetry small grid") {
    GridBounds b;
    b.n_max = 2;
    b.r_max = 1;
    b.w_max = 2;
    b.x_max = 2;
    const auto res = run_grid(IdentityId::thm2, b, 1);
    CHECK(res.reports.size() == 36);
    CHECK(res.all_passed);
}

TEST_CASE("degenerate symmetry sides at lambda = 0 are the q-distribution symmetric sums") {
    for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t r = 1; r <= 2; ++r) {
            for (std::size_t a = 1; a <= 3; ++a) {
                for (std::size_t b = 1; b <= 3; ++b) {
                    const auto side = thm2_side(n, r, a, b, 1);
                    CHECK(side.coeff(0) == symmetric_sum(n, r, a, b, 1));
                }
            }
        }
    }
}

TEST_CASE("stirling-form sides at lambda = 0 are the lambda-free sides") {
    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::size_t r = 1; r <= 2; ++r) {
            for (std::size_t a = 1; a <= 3; ++a) {
                for (std::size_t b = 1; b <= 3; ++b) {
                    for (const bool corrected : {false, true}) {
                        const auto side = thm3_side(n, r, a, b, 1, corrected);
                        CHECK(at_zero_lambda(side) == LambdaPolynomial(cor_lambda0_side(n, r, a, b, 1, corrected)));
                    }
                }
            }
        }
    }
}

TEST_CASE("corrected stirling-form sides equal the degenerate symmetry sides") {
    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::size_t r = 1; r <= 2; ++r) {
            for (std::size_t a = 1; a <= 3; ++a) {
                for (std::size_t b = 1; b <= 3; ++b) {
                    CHECK(thm3_side(n, r, a, b, 2, true) == thm2_side(n, r, a, b, 2));
                }
            }
        }
    }
}

TEST_CASE("uncorrected stirling-form side carries an extra [a]^n factor") {
    for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t a = 1; a <= 3; ++a) {
            const auto extra = testing::rf_poly(testing::geometric(a)).pow(static_cast<long>(n));
            CHECK(thm3_side(n, 2, a, 2, 1, false) == thm3_side(n, 2, a, 2, 1, true).scaled(extra));
        }
    }
    CHECK_FALSE(verify_thm3(at(1, 1, 2, 1, 0)).passed);
    CHECK(verify_thm3_corrected(at(1, 1, 2, 1, 0)).passed);
    CHECK(verify_thm3(at(0, 1, 2, 1, 0)).passed);
}

TEST_CASE("q-number product identity") {
    Params p = at(0, 1, 2, 3, 1);
    p.j = {1};
    p.y = {2};
    const auto rep = verify_eq29(p);
    CHECK(rep.passed);
    // 2*3*1 + 3*1 + 2*2 = 13
    CHECK(rep.lhs == to_string(testing::rf_poly(testing::geometric(13))));

    Params zero = at(0, 2, 3, 2, 0);
    zero.j = {0, 0};
    zero.y = {0, 0};
    CHECK(verify_eq29(zero).passed);
    CHECK(verify_eq29(zero).lhs == "(0)/(1)");

    testing::Gen gen(0xe29);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t r = gen.index(1, 2);
        Params q = at(0, r, gen.index(1, 3), gen.index(1, 3), gen.index(0, 3));
        for (std::size_t k = 0; k < r; ++k) {
            q.j.push_back(gen.index(0, 3));
            q.y.push_back(gen.index(0, 3));
        }
        const auto rep2 = verify_eq29(q);
        CHECK(rep2.passed);
        std::size_t e = q.w1 * q.w2 * q.x;
        for (std::size_t k = 0; k < r; ++k) e += q.w2 * q.j[k] + q.w1 * q.y[k];
        CHECK(rep2.lhs == to_string(testing::rf_poly(testing::geometric(e))));
    }
}

TEST_CASE("second-kind expansion of degenerate carlitz polynomials") {
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t x = 0; x <= 2; ++x) CHECK(verify_eq17(at(n, 1, 1, 1, x)).passed);
    }
    for (std::size_t n = 0; n <= 5; ++n) {
        Params p = at(n, 1, 1, 1, 0);
        p.symbolic_x = true;
        const auto rep = verify_eq17(p);
        CHECK(rep.passed);
        if (n == 1) CHECK(rep.lhs == "(-1/2+x)+(1/2)*L");
    }
}

TEST_CASE("falling factorial expansion") {
    for (std::size_t n = 0; n <= 8; ++n) CHECK(verify_eq24_expand(at(n, 1, 1, 1, 0)).passed);
    CHECK(verify_eq24_expand(at(2, 1, 1, 1, 0)).lhs == "(x^2)+(-x)*L");
}

TEST_CASE("finite-level symmetry reports") {
    for (std::size_t w1 = 1; w1 <= 3; ++w1) {
        for (std::size_t w2 = 1; w2 <= 3; ++w2) CHECK(verify_finite_sym(at(2, 2, w1, w2, 1)).passed);
    }
}

TEST_CASE("distribution formula reports") {
    GridBounds b;
    b.n_max = 3;
    b.r_max = 2;
    b.w_max = 3;
    b.x_max = 2;
    CHECK(run_grid(IdentityId::dist_formula, b).all_passed);
    CHECK(run_grid(IdentityId::eq31, b).all_passed);
}

TEST_CASE("grid enumeration") {
    GridBounds empty;
    empty.empty = true;
    const auto res = run_grid(IdentityId::thm2, empty, 4);
    CHECK(res.reports.empty());
    CHECK(res.all_passed);

    GridBounds b;
    b.n_max = 1;
    b.r_max = 2;
    b.w_max = 2;
    b.x_max = 1;
    const auto points = grid_points(IdentityId::thm2, b);
    CHECK(points.size() == 2 * 2 * 2 * 2 * 2);
    CHECK(std::is_sorted(points.begin(), points.end()));
    CHECK(grid_points(IdentityId::eq31, b).size() == 2 * 2 * 2 * 2);
    CHECK(grid_points(IdentityId::eq17, b).size() == 4);
    CHECK(grid_points(IdentityId::eq24_expand, b).size() == 2);
    // r = 1: 2*2*2 * 2 * 2; r = 2: 2*2*2 * 4 * 4
    CHECK(grid_points(IdentityId::eq29, b).size() == 8 * 4 + 8 * 16);

    GridBounds huge;
    huge.n_max = 100;
    huge.r_max = 10;
    huge.w_max = 20;
    huge.x_max = 10;
    CHECK_THROWS_AS(run_grid(IdentityId::thm2, huge), padic::ResourceError);
}

TEST_CASE("parallel grids report in the same order") {
    GridBounds b;
    b.n_max = 3;
    b.r_max = 2;
    b.w_max = 3;
    b.x_max = 1;
    const auto one = run_grid(IdentityId::thm2, b, 1);
    const auto many = run_grid(IdentityId::thm2, b, 8);
    REQUIRE(one.reports.size() == many.reports.size());
    for (std::size_t k = 0; k < one.reports.size(); ++k) {
        CHECK(one.reports[k].params == many.reports[k].params);
        CHECK(one.reports[k].lhs == many.reports[k].lhs);
        CHECK(one.reports[k].rhs == many.reports[k].rhs);
    }
}

TEST_CASE("injected stirling fault is detected with both sides embedded") {
    Options opt;
    opt.fault = Fault::stirling_lhs;
    GridBounds b;
    b.n_max = 2;
    b.r_max = 1;
    b.w_max = 2;
    b.x_max = 0;
    const auto res = run_grid(IdentityId::thm2, b, 1, opt);
    CHECK_FALSE(res.all_passed);
    std::size_t fails = 0;
    for (const auto& rep : res.reports) {
        if (rep.passed) continue;
        ++fails;
        CHECK(rep.lhs != rep.rhs);
        CHECK_FALSE(rep.lhs.empty());
        CHECK_FALSE(rep.rhs.empty());
    }
    CHECK(fails > 0);
    CHECK_FALSE(verify::verify(IdentityId::eq31, at(2, 1, 2, 1, 0), opt).passed);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(verify_thm2(at(1, 0, 1, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm3(at(1, 1, 0, 1, 0)), std::invalid_argument);
    Params p = at(0, 1, 1, 1, 0);
    p.j = {1};
    CHECK_THROWS_AS(verify_eq29(p), std::invalid_argument);
}
