#pragma once

// Command-line front end: value tables, identity grids and p-adic oracle checks.
//
// Exit codes: 0 everything passed, 1 some check failed (output is still
// written), 2 usage, parse or resource error.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/padic.hpp"
#include "qbern/rational.hpp"

namespace qbern::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Families accepted by `table --family`.
const std::vector<std::string>& table_families();

/// "1+p" or a rational "a/b".
Rational parse_q0(std::string_view text, unsigned long p);

struct PadicCheckRow {
    std::string check;
    std::size_t n = 0;
    std::size_t r = 1;
    std::size_t x = 0;
    std::vector<padic::Valuation> valuations;  // levels 1, 2, ...
    bool passed = false;
};

/// Every oracle for n <= n_max, r <= r_max, x <= x_max; multi-variable sums use
/// at most multi_levels levels.
std::vector<PadicCheckRow> padic_checks(const padic::PadicContext& ctx, std::size_t n_max, std::size_t r_max,
                                        std::size_t x_max, std::size_t levels, std::size_t multi_levels);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbern::cli
