#include "ford/geometry.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ford::geometry {

Fraction make_fraction(i64 p, i64 q) {
    if (q <= 0) throw std::domain_error("fraction denominator must be positive");
    if (p < 0 || p > q) throw std::domain_error("fractions are confined to [0, 1]");
    i64 g = std::gcd(p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (p == 0) q = 1;
    return Fraction{p, q};
}

bool fraction_less(const Fraction& a, const Fraction& b) {
    return static_cast<i128>(a.p) * b.q < static_cast<i128>(b.p) * a.q;
}

FordCircle circle_of(const Fraction& f) {
    Rational q2 = Rational(Int(f.q) * f.q);
    Rational r = Rational(1) / (2 * q2);
    return FordCircle{f, Rational(f.p, f.q), r, r};
}

OriginLine origin_line(i64 m) {
    if (m < 1) throw std::domain_error("origin line requires m >= 1");
    return OriginLine{m};
}

AffineLine affine_line(i64 m, Rational b) {
    if (m < 1) throw std::domain_error("affine line requires m >= 1");
    if (!(b > 0 && b < 1)) throw std::domain_error("affine intercept must satisfy 0 < b < 1");
    return AffineLine{m, std::move(b)};
}

HorizontalLine horizontal_line(Rational k) {
    if (!(k > 0)) throw std::domain_error("horizontal line requires k > 0");
    return HorizontalLine{std::move(k)};
}

bool circles_tangent(const Fraction& f1, const Fraction& f2) {
    if (f1 == f2) throw std::domain_error("tangency is undefined for identical circles");
    i128 cross = static_cast<i128>(f2.p) * f1.q - static_cast<i128>(f1.p) * f2.q;
    if (cross < 0) cross = -cross;
    return cross == 1;
}

bool circles_tangent_geometric(const Fraction& f1, const Fraction& f2) {
    if (f1 == f2) throw std::domain_error("tangency is undefined for identical circles");
    FordCircle c1 = circle_of(f1), c2 = circle_of(f2);
    Rational dx = c2.center_x - c1.center_x;
    Rational dy = c2.center_y - c1.center_y;
    Rational rr = c1.radius + c2.radius;
    return dx * dx + dy * dy == rr * rr;
}

bool origin_touches(i64 m, i64 p, i64 q) {
    // (2pq - m)^2 <= m^2 + 1, cleared form of
    // |p/(mq) - 1/(2q^2)| / sqrt(1/m^2 + 1) <= 1/(2q^2).
    i128 lhs = 2 * static_cast<i128>(p) * q - m;
    return lhs * lhs <= static_cast<i128>(m) * m + 1;
}

namespace {

bool affine_touches(const AffineLine& line, const Fraction& f, AffineMode mode) {
    const Int bn = numerator(line.b);
    const Int bd = denominator(line.b);
    const Int m = line.m;
    const Int p = f.p;
    const Int q = f.q;
    if (mode == AffineMode::paper) {
        // pq + m q^2 b <= m, cleared by b's denominator.
        return p * q * bd + m * q * q * bn <= m * bd;
    }
    // ((2pq - m) bd + 2 bn m q^2)^2 <= (m^2 + 1) bd^2
    Int lhs = (2 * p * q - m) * bd + 2 * bn * m * q * q;
    return lhs * lhs <= (m * m + 1) * bd * bd;
}

bool horizontal_touches(const HorizontalLine& line, const Fraction& f) {
    // |k - r| <= r  <=>  q^2 k <= 1, cleared by k's denominator.
    return Int(f.q) * f.q * numerator(line.k) <= denominator(line.k);
}

}  // namespace

bool line_touches(const LineSpec& line, const Fraction& f, AffineMode mode) {
    return std::visit(
        [&](const auto& l) -> bool {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, OriginLine>) {
                return origin_touches(l.m, f.p, f.q);
            } else if constexpr (std::is_same_v<T, AffineLine>) {
                return affine_touches(l, f, mode);
            } else {
                return horizontal_touches(l, f);
            }
        },
        line);
}

RatPoint tangent_point(const Fraction& f1, const Fraction& f2) {
    if (!circles_tangent(f1, f2))
        throw std::domain_error("tangent_point requires tangent circles");
    FordCircle c1 = circle_of(f1), c2 = circle_of(f2);
    // r1/(r1+r2) with r_i = 1/(2 q_i^2) reduces to q2^2 / (q1^2 + q2^2).
    Rational t = c1.radius / (c1.radius + c2.radius);
    return RatPoint{c1.center_x + t * (c2.center_x - c1.center_x),
                    c1.center_y + t * (c2.center_y - c1.center_y)};
}

std::vector<RatPoint> polyline_curve(std::span<const Fraction> seq) {
    std::vector<RatPoint> pts;
    if (seq.empty()) return pts;
    pts.reserve(2 * seq.size() - 1);
    FordCircle first = circle_of(seq[0]);
    pts.push_back(RatPoint{first.center_x, first.center_y});
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (!circles_tangent(seq[i - 1], seq[i]))
            throw std::domain_error("non-tangent consecutive pair at index " +
                                    std::to_string(i - 1));
        pts.push_back(tangent_point(seq[i - 1], seq[i]));
        FordCircle c = circle_of(seq[i]);
        pts.push_back(RatPoint{c.center_x, c.center_y});
    }
    return pts;
}

}  // namespace ford::geometry
