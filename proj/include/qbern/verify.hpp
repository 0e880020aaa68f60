#pragma once

// Exact identity harness for the symmetric identities of the higher-order
// degenerate q-Bernoulli polynomials.
//
// Every identity is decided over formal q and formal lambda: a pass means the
// two normalized sides are structurally identical at the given parameters.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/lambda_polynomial.hpp"
#include "qbern/padic.hpp"

namespace qbern::verify {

enum class IdentityId {
    thm2,
    thm3,
    cor_lambda0,
    eq31,
    dist_formula,
    eq29,
    eq17,
    eq24_expand,
    finite_sym,
    // thm3 and cor_lambda0 with the [w]_q exponent that the Stirling expansion
    // of thm2 actually produces (n+l-r-i -> l-r-i).
    thm3_corrected,
    cor_lambda0_corrected,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();

struct Params {
    std::size_t n = 0;
    std::size_t r = 1;
    std::size_t w1 = 1;
    std::size_t w2 = 1;
    std::size_t x = 0;
    bool symbolic_x = false;
    std::vector<std::size_t> j;  // only eq29
    std::vector<std::size_t> y;  // only eq29

    friend auto operator<=>(const Params&, const Params&) = default;
};

struct IdentityReport {
    IdentityId id;
    Params params;
    bool passed;
    std::string lhs;
    std::string rhs;
    double elapsed_ms;
};

/// Deliberate defects for mutation testing of the harness.
enum class Fault {
    none,
    /// Adds 1 to S1(n, n-1) in the Stirling row used by left-hand sides.
    stirling_lhs,
};

struct Options {
    Fault fault = Fault::none;
    /// Used by finite_sym (defaults: p = 3, q0 = 4, lam0 = 1, N = 1).
    padic::PadicContext padic = padic::PadicContext::standard(3, 4);
    std::size_t padic_level = 1;
};

/// [a]_q^{n-r} sum_{j in [0,a)^r} q^{b|j|} beta^{(r)}_{n, lambda/[a]_q, q^a}(b x + (b/a)|j|).
LambdaPolynomial thm2_side(std::size_t n, std::size_t r, std::size_t a, std::size_t b, std::size_t x,
                           Fault fault = Fault::none);

/// sum_{l,i} C(l,i) S1(n,l) lambda^{n-l} [a]^{E} [b]^i beta^{(r)}_{l-i,q^a}(b x) T^{(r)}_{l+1,i}(a | q^b)
/// with E = n+l-r-i (thm3) or l-r-i (thm3_corrected).
LambdaPolynomial thm3_side(std::size_t n, std::size_t r, std::size_t a, std::size_t b, std::size_t x, bool corrected,
                           Fault fault = Fault::none);

/// sum_i C(n,i) [a]^{E} [b]^i beta^{(r)}_{n-i,q^a}(b x) T^{(r)}_{n+1,i}(a | q^b)
/// with E = 2n-r-i (cor_lambda0) or n-r-i (cor_lambda0_corrected).
RationalFunction cor_lambda0_side(std::size_t n, std::size_t r, std::size_t a, std::size_t b, std::size_t x,
                                  bool corrected);

/// [w]_q^{n-r} sum_{j in [0,w)^r} q^{|j|} beta^{(r)}_{n,q^w}(x + |j|/w).
RationalFunction distribution_side(std::size_t n, std::size_t r, std::size_t w, std::size_t x);

IdentityReport verify_thm2(const Params& p, const Options& opt = {});
IdentityReport verify_thm3(const Params& p, const Options& opt = {});
IdentityReport verify_thm3_corrected(const Params& p, const Options& opt = {});
IdentityReport verify_cor_lambda0(const Params& p, const Options& opt = {});
IdentityReport verify_cor_lambda0_corrected(const Params& p, const Options& opt = {});
/// thm2 at w2 = 1 against beta^{(r)}_{n,lambda,q}(w1 x) from the Stirling expansion.
IdentityReport verify_eq31(const Params& p, const Options& opt = {});
/// beta^{(r)}_{n,q}(w1 x) = [w1]^{n-r} sum_j q^{|j|} beta^{(r)}_{n,q^{w1}}(x + |j|/w1).
IdentityReport verify_dist_formula(const Params& p, const Options& opt = {});
/// [w1 w2 x + w2|j| + w1|y|]_q = [w1]_q [w2 x + (w2/w1)|j| + |y|]_{q^{w1}}; r = j.size() = y.size().
IdentityReport verify_eq29(const Params& p, const Options& opt = {});
/// B*_{n,lambda}(x) = sum_l C(n,l) lambda^l b_l B_{n-l,lambda}(x); symbolic_x selects a formal x.
IdentityReport verify_eq17(const Params& p, const Options& opt = {});
/// y(y-lambda)...(y-(n-1)lambda) = sum_l S1(n,l) lambda^{n-l} y^l.
IdentityReport verify_eq24_expand(const Params& p, const Options& opt = {});
/// Both finite-level forms of the symmetric sum agree exactly.
IdentityReport verify_finite_sym(const Params& p, const Options& opt = {});

IdentityReport verify(IdentityId id, const Params& p, const Options& opt = {});

struct GridBounds {
    std::size_t n_max = 0;
    std::size_t r_max = 1;
    std::size_t w_max = 1;
    std::size_t x_max = 0;
    /// An empty grid yields no points.
    bool empty = false;
};

/// Grid points in lexicographic parameter order.
std::vector<Params> grid_points(IdentityId id, const GridBounds& bounds);

struct GridResult {
    std::vector<IdentityReport> reports;
    bool all_passed = true;
};

/// Points above this count are refused with padic::ResourceError.
inline constexpr std::size_t kMaxGridPoints = 200'000;

/// Evaluates every grid point; report order is independent of jobs.
GridResult run_grid(IdentityId id, const GridBounds& bounds, unsigned jobs = 1, const Options& opt = {});

}  // namespace qbern::verify
