#pragma once

#include <span>
#include <variant>
#include <vector>

#include "ford/numeric.hpp"

namespace ford::geometry {

// Reduced fraction p/q in [0, 1]; identifies the circle tangent to the
// x-axis at (p/q, 0) with radius 1/(2q^2).
struct Fraction {
    i64 p = 0;
    i64 q = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Reduces and validates 0 <= p/q <= 1. Throws std::domain_error otherwise.
Fraction make_fraction(i64 p, i64 q);

// Value order by exact cross multiplication.
bool fraction_less(const Fraction& a, const Fraction& b);

struct FordCircle {
    Fraction frac;
    Rational center_x;
    Rational center_y;
    Rational radius;  // == center_y
};

FordCircle circle_of(const Fraction& f);

struct OriginLine { i64 m = 1; };                 // y = x/m
struct AffineLine { i64 m = 1; Rational b; };     // y = x/m + b, 0 < b < 1
struct HorizontalLine { Rational k; };            // y = k, k > 0

using LineSpec = std::variant<OriginLine, AffineLine, HorizontalLine>;

OriginLine origin_line(i64 m);
AffineLine affine_line(i64 m, Rational b);
HorizontalLine horizontal_line(Rational k);

// Touch condition for affine lines: `exact` clears denominators in the
// squared-distance inequality; `paper` is the simplified bound
// pq + m q^2 b <= m, which trims a sliver near the boundary.
enum class AffineMode { exact, paper };

// |p2 q1 - p1 q2| == 1. Throws std::domain_error when f1 == f2.
bool circles_tangent(const Fraction& f1, const Fraction& f2);

// Independent route: (dx^2 + dy^2) == (r1 + r2)^2 in exact rationals.
bool circles_tangent_geometric(const Fraction& f1, const Fraction& f2);

// Does the line touch the circle of f? Exact integer comparisons throughout.
bool line_touches(const LineSpec& line, const Fraction& f,
                  AffineMode mode = AffineMode::exact);

// Hot-path form of the origin-line predicate, (2pq - m)^2 <= m^2 + 1,
// evaluated in 128-bit integers. Requires p*q < 2^62 and m < 2^62.
bool origin_touches(i64 m, i64 p, i64 q);

struct RatPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

// Point where the two tangent circles meet: c1 + r1/(r1+r2) * (c2 - c1).
// Throws std::domain_error for a non-tangent pair.
RatPoint tangent_point(const Fraction& f1, const Fraction& f2);

// Polyline center(f_1), tangent(f_1,f_2), center(f_2), ... with 2n-1
// vertices. Throws std::domain_error naming the first non-tangent index.
std::vector<RatPoint> polyline_curve(std::span<const Fraction> seq);

}  // namespace ford::geometry
