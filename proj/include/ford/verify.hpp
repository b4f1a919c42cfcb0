#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ford/arith.hpp"
#include "ford/numeric.hpp"

namespace ford::verify {

// Each check returns the first violation found, or nullopt when clean.

// extract_origin == predicate filter == adjacent walk for every m <= max_m,
// plus per-m structure: ascending, endpoints 0/1 and 1/1, mediant and
// adjacency identities, monotone nesting, and the largest-numerator bound.
std::optional<std::string> check_extraction(i64 max_m);

// jump == |coprime_factor_pairs| == 2^(omega-1), cardinality formulas agree
// with the pair-count prefix sums, and consecutive differences match jumps.
std::optional<std::string> check_counting(i64 max_m, const arith::SieveTables* tables = nullptr);

// |phi_x(x, n) - x phi(n)/n| < phi(n), exact integer comparison.
std::optional<std::string> check_phi_x_bound(i64 n_max, i64 x_max);

// The non-reconstructible mediant triple behaves as documented.
std::optional<std::string> check_counterexample();

struct VerifyResult {
    bool ok = true;
    std::string first_violation;
};

// Full suite, scaled by max_m. Logs one line per stage when log != nullptr.
VerifyResult run(i64 max_m, std::ostream* log = nullptr);

}  // namespace ford::verify
