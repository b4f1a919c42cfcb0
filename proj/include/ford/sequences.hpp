#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ford/geometry.hpp"
#include "ford/numeric.hpp"

namespace ford::sequences {

using geometry::AffineMode;
using geometry::Fraction;
using geometry::LineSpec;

struct ExtractionResult {
    LineSpec line;
    std::vector<Fraction> fractions;  // strictly ascending by value
    std::size_t count = 0;            // == fractions.size()
};

// F_{1/m}: {0/1} plus every reduced p/q with 1 <= p <= q and pq <= m,
// ascending. Generation enumerates p up to floor(sqrt(m)), q in [p, m/p].
ExtractionResult extract_origin(i64 m);

// |extract_origin(m)| from the same enumeration, skipping the sort.
i64 origin_count(i64 m);

// Independent route 1: filter all candidates with q <= m through the
// geometric line_touches predicate.
ExtractionResult extract_origin_by_predicate(i64 m);

// Independent route 2: adjacent walk. From consecutive a/b < c/d the next
// element is ((kc-a)/(kd-b)) for the largest k keeping the product <= m;
// k = floor((cb + ad + isqrt(1 + 4cdm)) / (2cd)). Uses no gcd and no
// touch predicate, so it cross-checks both other routes.
ExtractionResult extract_origin_walk(i64 m);

// Fractions touched by y = x/m + b. Finite: q is capped near sqrt(1/b).
ExtractionResult extract_affine(i64 m, const Rational& b,
                                AffineMode mode = AffineMode::exact);

// Farey sequence of order n: all reduced p/q with q <= n in [0, 1].
ExtractionResult farey(i64 n);

// Extraction by the horizontal line y = k: equals farey(floor(sqrt(1/k)))
// for k <= 1, and is empty for k > 1 (the line clears every circle).
ExtractionResult farey_horizontal(const Rational& k);

enum class ViolationKind { mediant, adjacency };

struct Violation {
    std::size_t index;  // middle of the triple / first of the pair
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Checks a2 (b1 + b3) == b2 (a1 + a3) for every consecutive triple, by
// cross multiplication without reducing the mediant. Sequences shorter
// than a triple pass vacuously. Throws std::domain_error if not strictly
// ascending.
ValidationReport validate_mediant(std::span<const Fraction> seq);

// Checks |a2 b1 - a1 b2| == 1 for every consecutive pair.
ValidationReport validate_adjacency(std::span<const Fraction> seq);

// True iff at least one consecutive pair is adjacent. Requires the mediant
// property (else std::domain_error); under it adjacency propagates to every
// pair, which is re-verified — a mixed outcome throws std::logic_error.
bool check_reconstructible(std::span<const Fraction> seq);

// "0/1, 1/32, ..." comma-separated listing.
std::string to_text(std::span<const Fraction> seq);

// JSON array of {"p": int, "q": int}.
std::string to_json(std::span<const Fraction> seq);
std::vector<Fraction> from_json(std::string_view text);

// CSV with header p,q,value; value printed to 12 decimal places.
std::string to_csv(std::span<const Fraction> seq);

}  // namespace ford::sequences
