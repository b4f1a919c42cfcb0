#include <doctest.h>

#include <numeric>
#include <random>

#include "ford/geometry.hpp"

using namespace ford;
using namespace ford::geometry;

TEST_CASE("make_fraction canonical form") {
    Fraction f = make_fraction(6, 8);
    CHECK(f == Fraction{3, 4});
    CHECK(make_fraction(0, 5) == Fraction{0, 1});
    CHECK(make_fraction(7, 7) == Fraction{1, 1});
    CHECK_THROWS_AS(make_fraction(3, 2), std::domain_error);
    CHECK_THROWS_AS(make_fraction(-1, 2), std::domain_error);
    CHECK_THROWS_AS(make_fraction(1, 0), std::domain_error);
    CHECK(fraction_less(Fraction{1, 3}, Fraction{1, 2}));
    CHECK(!fraction_less(Fraction{1, 2}, Fraction{1, 2}));
}

TEST_CASE("circle coordinates") {
    FordCircle c0 = circle_of(Fraction{0, 1});
    CHECK(c0.center_x == 0);
    CHECK(c0.center_y == Rational(1, 2));
    CHECK(c0.radius == Rational(1, 2));

    FordCircle c12 = circle_of(Fraction{1, 2});
    CHECK(c12.center_x == Rational(1, 2));
    CHECK(c12.center_y == Rational(1, 8));
    CHECK(c12.radius == Rational(1, 8));

    CHECK(circle_of(Fraction{2, 15}).radius == Rational(1, 450));
}

TEST_CASE("tangency predicate") {
    CHECK(circles_tangent(Fraction{1, 8}, Fraction{2, 15}));
    CHECK(!circles_tangent(Fraction{4, 7}, Fraction{5, 7}));  // cross product 7
    CHECK(circles_tangent(Fraction{0, 1}, Fraction{1, 1}));
    CHECK_THROWS_AS(circles_tangent(Fraction{1, 2}, Fraction{1, 2}), std::domain_error);
}

TEST_CASE("algebraic tangency agrees with the exact distance test") {
    std::mt19937 rng(20240211);
    std::uniform_int_distribution<i64> qd(1, 200);
    int done = 0;
    while (done < 10000) {
        i64 q1 = qd(rng), q2 = qd(rng);
        std::uniform_int_distribution<i64> pd1(0, q1), pd2(0, q2);
        i64 p1 = pd1(rng), p2 = pd2(rng);
        if (std::gcd(p1, q1) != 1 || std::gcd(p2, q2) != 1) continue;
        Fraction f1 = make_fraction(p1, q1), f2 = make_fraction(p2, q2);
        if (f1 == f2) continue;
        CHECK(circles_tangent(f1, f2) == circles_tangent_geometric(f1, f2));
        ++done;
    }
}

TEST_CASE("origin line touch condition") {
    LineSpec l32 = origin_line(32);
    CHECK(line_touches(l32, Fraction{5, 6}));    // pq = 30
    CHECK(!line_touches(l32, Fraction{5, 7}));   // pq = 35
    for (i64 m : {1, 2, 7, 100}) CHECK(line_touches(origin_line(m), Fraction{0, 1}));
    CHECK_THROWS_AS(origin_line(0), std::domain_error);

    // touches iff pq <= m, for every m <= 500 and every pair near the boundary
    for (i64 m = 1; m <= 500; ++m) {
        for (i64 p = 1; p * p <= m + 2; ++p) {
            for (i64 q = p; p * q <= m + 2; ++q) {
                if (std::gcd(p, q) != 1) continue;
                CHECK(origin_touches(m, p, q) == (p * q <= m));
            }
        }
    }
}

TEST_CASE("horizontal line touch condition") {
    for (i64 n = 1; n <= 40; ++n) {
        LineSpec line = horizontal_line(Rational(1, n * n));
        for (i64 q = 1; q <= n + 3; ++q) {
            for (i64 p = (q == 1 ? 0 : 1); p <= q; ++p) {
                if (std::gcd(p, q) > 1) continue;
                CHECK(line_touches(line, Fraction{p, q}) == (q <= n));
            }
        }
    }
    CHECK_THROWS_AS(horizontal_line(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(horizontal_line(Rational(-1, 2)), std::domain_error);
}

TEST_CASE("affine line touch condition") {
    CHECK_THROWS_AS(affine_line(32, Rational(2)), std::domain_error);
    CHECK_THROWS_AS(affine_line(32, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(affine_line(32, Rational(1)), std::domain_error);

    // paper-mode simplification never admits a circle the exact test rejects
    std::mt19937 rng(7);
    std::uniform_int_distribution<i64> md(1, 500), bn(1, 20);
    for (int iter = 0; iter < 300; ++iter) {
        i64 m = md(rng);
        i64 den = bn(rng) + 1;
        std::uniform_int_distribution<i64> num(1, den - 1);
        Rational b(num(rng), den);
        LineSpec line = affine_line(m, b);
        for (i64 q = 1; q <= 30; ++q) {
            for (i64 p = (q == 1 ? 0 : 1); p <= q; ++p) {
                if (std::gcd(p, q) > 1) continue;
                Fraction f{p, q};
                if (line_touches(line, f, AffineMode::paper))
                    CHECK(line_touches(line, f, AffineMode::exact));
            }
        }
    }

    // 0/1 is touched by every affine line with b in (0,1): the distance from
    // (0, 1/2) to the line is |b - 1/2| / sqrt(1/m^2+1) < 1/2.
    for (i64 m : {1, 3, 1000}) {
        for (Rational b : {Rational(1, 9), Rational(1, 2), Rational(99, 100)}) {
            CHECK(line_touches(affine_line(m, b), Fraction{0, 1}, AffineMode::exact));
        }
    }
}

TEST_CASE("tangent point") {
    RatPoint mid = tangent_point(Fraction{0, 1}, Fraction{1, 1});
    CHECK(mid.x == Rational(1, 2));
    CHECK(mid.y == Rational(1, 2));

    RatPoint t = tangent_point(Fraction{0, 1}, Fraction{1, 2});
    CHECK(t.x > 0);
    CHECK(t.x < Rational(1, 2));
    CHECK(t.y > 0);
    CHECK(t.y < Rational(1, 2));

    // mirror image under x -> 1 - x
    RatPoint u = tangent_point(Fraction{1, 2}, Fraction{1, 1});
    CHECK(u.x == 1 - t.x);
    CHECK(u.y == t.y);

    CHECK_THROWS_AS(tangent_point(Fraction{4, 7}, Fraction{5, 7}), std::domain_error);
}

TEST_CASE("tangent point lies on both circles") {
    auto on_circle = [](const RatPoint& pt, const Fraction& f) {
        FordCircle c = circle_of(f);
        Rational dx = pt.x - c.center_x;
        Rational dy = pt.y - c.center_y;
        return dx * dx + dy * dy == c.radius * c.radius;
    };
    const std::pair<Fraction, Fraction> pairs[] = {
        {{0, 1}, {1, 1}}, {{0, 1}, {1, 2}}, {{1, 2}, {1, 1}},
        {{1, 8}, {2, 15}}, {{1, 3}, {2, 5}}, {{3, 7}, {1, 2}},
    };
    for (const auto& [f1, f2] : pairs) {
        RatPoint t = tangent_point(f1, f2);
        CHECK(on_circle(t, f1));
        CHECK(on_circle(t, f2));
    }
}

TEST_CASE("polyline construction") {
    const Fraction two[] = {Fraction{0, 1}, Fraction{1, 1}};
    std::vector<RatPoint> pts = polyline_curve(two);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == RatPoint{Rational(0), Rational(1, 2)});
    CHECK(pts[1] == RatPoint{Rational(1, 2), Rational(1, 2)});
    CHECK(pts[2] == RatPoint{Rational(1), Rational(1, 2)});

    const Fraction one[] = {Fraction{0, 1}};
    CHECK(polyline_curve(one).size() == 1);

    const Fraction bad[] = {Fraction{4, 7}, Fraction{9, 14}, Fraction{5, 7}};
    CHECK_THROWS_WITH_AS(polyline_curve(bad), "non-tangent consecutive pair at index 0",
                         std::domain_error);
}
