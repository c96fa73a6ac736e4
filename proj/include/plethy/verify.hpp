#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "plethy/charvar.hpp"

namespace plethy::verify {

// One named reproduction check. `criterion` links the check to an
// acceptance criterion (1..11), 0 for supporting identities. A failing
// check always carries a nonempty detail (difference polynomial, count
// mismatch, or the first failing instances).
struct CheckResult {
    std::string name;
    int criterion = 0;
    bool pass = false;
    std::string detail;
};

enum class Suite { All, Combinatorics, Plethystic, Gl2, Gl3, Abelian, Cartan };

std::optional<Suite> parse_suite(std::string_view s);
std::string suite_name(Suite s);

// Runs the selected checks with the given seed for the randomized
// identities. Deterministic: report order is fixed by name and
// rerunning with the same seed reproduces the report exactly.
std::vector<CheckResult> run_suite(Suite which, std::uint64_t seed = 0);

bool all_passed(const std::vector<CheckResult>& results);

// Seeded generators shared by the reproduction suite and the tests.
// Coefficients are integers in [-max_abs_coeff, max_abs_coeff].
Poly2 random_poly2(std::mt19937_64& rng, int max_total_degree, int max_abs_coeff);
PolyX random_polyx(std::mt19937_64& rng, int max_degree, int max_abs_coeff);
// zero_constant selects the pexp domain (t^0 coefficient 0); otherwise
// the plog domain (t^0 coefficient 1).
TruncSeries random_series(std::mt19937_64& rng, int order, int max_total_degree,
                          int max_abs_coeff, bool zero_constant);

} // namespace plethy::verify
