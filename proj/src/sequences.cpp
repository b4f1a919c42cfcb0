#include "ford/sequences.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace ford::sequences {

namespace {

using geometry::fraction_less;
using geometry::make_fraction;

void sort_by_value(std::vector<Fraction>& v) {
    std::sort(v.begin(), v.end(), fraction_less);
}

void require_ascending(std::span<const Fraction> seq, const char* who) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (!fraction_less(seq[i - 1], seq[i]))
            throw std::domain_error(std::string(who) + " requires a strictly ascending sequence");
    }
}

// Materialized sequences grow like m ln m (extraction) and n^2 (Farey);
// past these limits the output no longer fits in a sane address space.
constexpr i64 kMaxExtractM = 10'000'000;
constexpr i64 kMaxFareyOrder = 20'000;

}  // namespace

ExtractionResult extract_origin(i64 m) {
    if (m < 1) throw std::domain_error("extract_origin requires m >= 1");
    if (m > kMaxExtractM) throw std::length_error("extraction size exceeds memory budget");
    std::vector<Fraction> out;
    out.push_back(Fraction{0, 1});
    for (i64 p = 1; p * p <= m; ++p) {
        for (i64 q = p; p * q <= m; ++q) {
            if (std::gcd(p, q) == 1) out.push_back(Fraction{p, q});
        }
    }
    sort_by_value(out);
    std::size_t n = out.size();
    return ExtractionResult{geometry::origin_line(m), std::move(out), n};
}

i64 origin_count(i64 m) {
    if (m < 1) throw std::domain_error("origin_count requires m >= 1");
    i64 n = 1;  // 0/1
    for (i64 p = 1; p * p <= m; ++p) {
        for (i64 q = p; p * q <= m; ++q) {
            if (std::gcd(p, q) == 1) ++n;
        }
    }
    return n;
}

ExtractionResult extract_origin_by_predicate(i64 m) {
    if (m < 1) throw std::domain_error("extract_origin_by_predicate requires m >= 1");
    LineSpec line = geometry::origin_line(m);
    std::vector<Fraction> out;
    if (geometry::line_touches(line, Fraction{0, 1})) out.push_back(Fraction{0, 1});
    for (i64 q = 1; q <= m; ++q) {
        for (i64 p = 1; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Fraction f{p, q};
            if (geometry::line_touches(line, f)) out.push_back(f);
        }
    }
    sort_by_value(out);
    std::size_t n = out.size();
    return ExtractionResult{std::move(line), std::move(out), n};
}

ExtractionResult extract_origin_walk(i64 m) {
    if (m < 1) throw std::domain_error("extract_origin_walk requires m >= 1");
    std::vector<Fraction> out;
    out.push_back(Fraction{0, 1});
    out.push_back(Fraction{1, m});
    while (!(out.back().p == 1 && out.back().q == 1)) {
        const Fraction& a = out[out.size() - 2];
        const Fraction& c = out[out.size() - 1];
        u64 disc = 1 + 4 * static_cast<u64>(c.q) * c.p * static_cast<u64>(m);
        i64 k = (c.p * a.q + a.p * c.q + static_cast<i64>(isqrt(disc))) / (2 * c.p * c.q);
        out.push_back(Fraction{k * c.p - a.p, k * c.q - a.q});
    }
    std::size_t n = out.size();
    return ExtractionResult{geometry::origin_line(m), std::move(out), n};
}

ExtractionResult extract_affine(i64 m, const Rational& b, AffineMode mode) {
    geometry::AffineLine al = geometry::affine_line(m, b);  // validates m, b
    LineSpec line = al;
    std::vector<Fraction> out;
    if (geometry::line_touches(line, Fraction{0, 1}, mode)) out.push_back(Fraction{0, 1});

    const Int bn = numerator(b), bd = denominator(b);
    const Int bound = (Int(m) * m + 1) * bd * bd;
    for (i64 q = 1;; ++q) {
        // Once the p = 1 value is positive and past the bound, larger q only
        // pushes it further out; stop.
        Int base = 2 * Int(bn) * m * q * q - Int(m) * bd;
        Int v1 = base + 2 * Int(q) * bd;
        if (v1 > 0 && v1 * v1 > bound) break;
        for (i64 p = 1; p <= q; ++p) {
            Int v = base + 2 * Int(p) * q * bd;
            if (v > 0 && v * v > bound) break;
            if (std::gcd(p, q) != 1) continue;
            Fraction f{p, q};
            if (geometry::line_touches(line, f, mode)) out.push_back(f);
        }
    }
    sort_by_value(out);
    std::size_t n = out.size();
    return ExtractionResult{std::move(line), std::move(out), n};
}

ExtractionResult farey(i64 n) {
    if (n < 1) throw std::domain_error("farey requires n >= 1");
    if (n > kMaxFareyOrder) throw std::length_error("farey order exceeds memory budget");
    std::vector<Fraction> out;
    out.push_back(Fraction{0, 1});
    out.push_back(Fraction{1, 1});
    for (i64 q = 2; q <= n; ++q) {
        for (i64 p = 1; p < q; ++p) {
            if (std::gcd(p, q) == 1) out.push_back(Fraction{p, q});
        }
    }
    sort_by_value(out);
    std::size_t cnt = out.size();
    Rational k(1, Int(n) * n);
    return ExtractionResult{geometry::horizontal_line(std::move(k)), std::move(out), cnt};
}

ExtractionResult farey_horizontal(const Rational& k) {
    geometry::HorizontalLine hl = geometry::horizontal_line(k);  // validates k > 0
    if (k > 1) {
        // The line passes above every circle top (max height 1/q^2 <= 1).
        return ExtractionResult{hl, {}, 0};
    }
    i64 n = static_cast<i64>(isqrt(static_cast<u64>(
        Int(denominator(k) / numerator(k)).convert_to<i64>())));
    ExtractionResult r = farey(n);
    r.line = hl;
    return r;
}

ValidationReport validate_mediant(std::span<const Fraction> seq) {
    require_ascending(seq, "validate_mediant");
    ValidationReport rep;
    for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
        const Fraction &f1 = seq[i], &f2 = seq[i + 1], &f3 = seq[i + 2];
        i128 lhs = static_cast<i128>(f2.p) * (f1.q + f3.q);
        i128 rhs = static_cast<i128>(f2.q) * (f1.p + f3.p);
        if (lhs != rhs) {
            rep.ok = false;
            rep.violations.push_back(Violation{
                i + 1, ViolationKind::mediant,
                std::to_string(f2.p) + "/" + std::to_string(f2.q) + " != mediant of " +
                    std::to_string(f1.p) + "/" + std::to_string(f1.q) + " and " +
                    std::to_string(f3.p) + "/" + std::to_string(f3.q)});
        }
    }
    return rep;
}

ValidationReport validate_adjacency(std::span<const Fraction> seq) {
    require_ascending(seq, "validate_adjacency");
    ValidationReport rep;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const Fraction &f1 = seq[i], &f2 = seq[i + 1];
        i128 cross = static_cast<i128>(f2.p) * f1.q - static_cast<i128>(f1.p) * f2.q;
        if (cross != 1) {
            rep.ok = false;
            rep.violations.push_back(Violation{
                i, ViolationKind::adjacency,
                std::to_string(f1.p) + "/" + std::to_string(f1.q) + " and " +
                    std::to_string(f2.p) + "/" + std::to_string(f2.q) + " have cross product " +
                    std::to_string(static_cast<i64>(cross))});
        }
    }
    return rep;
}

bool check_reconstructible(std::span<const Fraction> seq) {
    if (seq.size() < 2)
        throw std::domain_error("check_reconstructible requires at least two fractions");
    if (!validate_mediant(seq).ok)
        throw std::domain_error("check_reconstructible requires the mediant property");
    std::size_t adjacent = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (geometry::circles_tangent(seq[i], seq[i + 1])) ++adjacent;
    }
    if (adjacent == 0) return false;
    // One adjacent pair plus the mediant identity forces all pairs adjacent;
    // anything else means the validators disagree with each other.
    if (adjacent != seq.size() - 1)
        throw std::logic_error("adjacency failed to propagate through a mediant-valid sequence");
    return true;
}

std::string to_text(std::span<const Fraction> seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(seq[i].p) + "/" + std::to_string(seq[i].q);
    }
    return s;
}

std::string to_json(std::span<const Fraction> seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Fraction& f : seq) arr.push_back({{"p", f.p}, {"q", f.q}});
    return arr.dump();
}

std::vector<Fraction> from_json(std::string_view text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::domain_error("expected a JSON array of fractions");
    std::vector<Fraction> out;
    out.reserve(arr.size());
    for (const auto& item : arr)
        out.push_back(make_fraction(item.at("p").get<i64>(), item.at("q").get<i64>()));
    return out;
}

std::string to_csv(std::span<const Fraction> seq) {
    std::string s = "p,q,value\n";
    char buf[64];
    for (const Fraction& f : seq) {
        std::snprintf(buf, sizeof buf, "%lld,%lld,%.12f", static_cast<long long>(f.p),
                      static_cast<long long>(f.q),
                      static_cast<double>(f.p) / static_cast<double>(f.q));
        s += buf;
        s += '\n';
    }
    return s;
}

}  // namespace ford::sequences
