#include "ford/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "ford/counting.hpp"
#include "ford/geometry.hpp"
#include "ford/sequences.hpp"

namespace ford::verify {

namespace {

using geometry::Fraction;

std::string frac_str(const Fraction& f) {
    return std::to_string(f.p) + "/" + std::to_string(f.q);
}

}  // namespace

std::optional<std::string> check_extraction(i64 max_m) {
    if (max_m < 1) return "extraction check requires max_m >= 1";

    // Coprime pairs (p, q), p <= q <= max_m, grouped by q so the predicate
    // route can scan exactly the candidates with q <= m for each m.
    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
    std::vector<std::size_t> q_offset(static_cast<std::size_t>(max_m) + 2, 0);
    for (i64 q = 1; q <= max_m; ++q) {
        for (i64 p = 1; p <= q; ++p) {
            if (std::gcd(p, q) == 1)
                pairs.emplace_back(static_cast<std::int32_t>(p), static_cast<std::int32_t>(q));
        }
        q_offset[q + 1] = pairs.size();
    }

    std::vector<Fraction> prev;
    for (i64 m = 1; m <= max_m; ++m) {
        sequences::ExtractionResult ext = sequences::extract_origin(m);
        const std::vector<Fraction>& seq = ext.fractions;

        if (ext.count != seq.size())
            return "m=" + std::to_string(m) + ": count field disagrees with sequence length";
        if (seq.front() != Fraction{0, 1} || seq.back() != Fraction{1, 1})
            return "m=" + std::to_string(m) + ": endpoints are not 0/1 and 1/1";
        for (std::size_t i = 1; i < seq.size(); ++i) {
            if (!geometry::fraction_less(seq[i - 1], seq[i]))
                return "m=" + std::to_string(m) + ": sequence not strictly ascending at " +
                       std::to_string(i);
        }

        // Route 2: geometric predicate over every candidate with q <= m.
        std::vector<Fraction> by_predicate;
        by_predicate.push_back(Fraction{0, 1});
        for (std::size_t i = 0; i < q_offset[m + 1]; ++i) {
            if (geometry::origin_touches(m, pairs[i].first, pairs[i].second))
                by_predicate.push_back(Fraction{pairs[i].first, pairs[i].second});
        }
        std::sort(by_predicate.begin(), by_predicate.end(), geometry::fraction_less);
        if (by_predicate != seq)
            return "m=" + std::to_string(m) + ": predicate filter disagrees with enumeration";

        // Route 3: adjacent walk.
        sequences::ExtractionResult walked = sequences::extract_origin_walk(m);
        if (walked.fractions != seq)
            return "m=" + std::to_string(m) + ": adjacent walk disagrees with enumeration";

        sequences::ValidationReport med = sequences::validate_mediant(seq);
        if (!med.ok)
            return "m=" + std::to_string(m) +
                   ": mediant violation at index " + std::to_string(med.violations[0].index);
        sequences::ValidationReport adj = sequences::validate_adjacency(seq);
        if (!adj.ok)
            return "m=" + std::to_string(m) +
                   ": adjacency violation at index " + std::to_string(adj.violations[0].index);

        // Nesting: everything extracted at m-1 is still extracted at m.
        if (!std::includes(seq.begin(), seq.end(), prev.begin(), prev.end(),
                           geometry::fraction_less))
            return "m=" + std::to_string(m) + ": extraction lost fractions present at m-1";
        prev = seq;

        if (m >= 2) {
            i64 max_p = 0;
            for (const Fraction& f : seq) max_p = std::max(max_p, f.p);
            if (max_p != counting::s_of(m))
                return "m=" + std::to_string(m) + ": largest numerator " + std::to_string(max_p) +
                       " != s_of(m) = " + std::to_string(counting::s_of(m));
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_counting(i64 max_m, const arith::SieveTables* tables) {
    if (max_m < 1) return "counting check requires max_m >= 1";
    std::vector<i64> card = counting::cardinality_sweep(max_m, tables);

    // Pair counts by product, independent of omega/mu: one gcd-filtered scan.
    std::vector<i64> pair_count(static_cast<std::size_t>(max_m) + 1, 0);
    for (i64 p = 1; p * p <= max_m; ++p) {
        for (i64 q = p; p * q <= max_m; ++q) {
            if (std::gcd(p, q) == 1) ++pair_count[p * q];
        }
    }

    i64 brute_card = 1;  // 0/1
    for (i64 m = 1; m <= max_m; ++m) {
        brute_card += pair_count[m];
        counting::JumpRecord rec = counting::jump(m, tables);
        i64 pairs = static_cast<i64>(arith::coprime_factor_pairs(m).size());
        if (rec.s_m != pairs)
            return "m=" + std::to_string(m) + ": jump " + std::to_string(rec.s_m) +
                   " != coprime pair count " + std::to_string(pairs);
        if (m >= 2 && rec.s_m != (i64{1} << (arith::omega_of(m, tables) - 1)))
            return "m=" + std::to_string(m) + ": jump does not equal 2^(omega-1)";
        if ((rec.s_m & (rec.s_m - 1)) != 0)
            return "m=" + std::to_string(m) + ": jump is not a power of two";
        if (card[m] != brute_card)
            return "m=" + std::to_string(m) + ": cardinality " + std::to_string(card[m]) +
                   " != brute pair prefix count " + std::to_string(brute_card);
        if (m >= 2 && card[m] - card[m - 1] != rec.s_m)
            return "m=" + std::to_string(m) + ": cardinality difference != jump";
    }

    // The mobius double sum is the slow formula; spot-check a sparse grid.
    for (i64 m = 1; m <= max_m; m = (m < 16 ? m + 1 : m + m / 3)) {
        if (counting::cardinality_mobius(m, tables) != card[m])
            return "m=" + std::to_string(m) + ": mobius double-sum formula disagrees";
    }
    if (counting::cardinality_mobius(max_m, tables) != card[max_m])
        return "m=" + std::to_string(max_m) + ": mobius double-sum formula disagrees";
    return std::nullopt;
}

std::optional<std::string> check_phi_x_bound(i64 n_max, i64 x_max) {
    for (i64 n = 1; n <= n_max; ++n) {
        i64 phi_n = arith::euler_phi(n);
        for (i64 x = 1; x <= x_max; ++x) {
            // |phi_x - x phi(n)/n| < phi(n), cleared by n.
            i64 lhs = arith::phi_x(x, n) * n - x * phi_n;
            if (lhs < 0) lhs = -lhs;
            if (lhs >= phi_n * n)
                return "phi_x bound fails at n=" + std::to_string(n) + ", x=" + std::to_string(x);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_counterexample() {
    const std::vector<Fraction> bad = {Fraction{4, 7}, Fraction{9, 14}, Fraction{5, 7}};
    if (!sequences::validate_mediant(bad).ok)
        return "counterexample triple should satisfy the mediant identity";
    sequences::ValidationReport adj = sequences::validate_adjacency(bad);
    if (adj.ok || adj.violations.size() != 2)
        return "counterexample triple should fail adjacency at both pairs";
    if (sequences::check_reconstructible(bad))
        return "counterexample triple must not be reconstructible";
    if (geometry::circles_tangent(bad[0], bad[2]) || geometry::circles_tangent_geometric(bad[0], bad[2]))
        return "4/7 and 5/7 must not be tangent (cross product 7)";
    return std::nullopt;
}

VerifyResult run(i64 max_m, std::ostream* log) {
    struct Stage {
        const char* name;
        std::optional<std::string> failure;
    };
    const Stage stages[] = {
        {"extraction routes", check_extraction(max_m)},
        {"counting formulas", check_counting(std::max<i64>(max_m, 100), nullptr)},
        {"relative-prime count bound", check_phi_x_bound(50, 1000)},
        {"mediant counterexample", check_counterexample()},
    };
    for (const Stage& s : stages) {
        if (log) {
            *log << (s.failure ? "FAIL " : "ok   ") << s.name;
            if (s.failure) *log << ": " << *s.failure;
            *log << "\n";
        }
        if (s.failure) return VerifyResult{false, std::string(s.name) + ": " + *s.failure};
    }
    return VerifyResult{true, {}};
}

}  // namespace ford::verify
