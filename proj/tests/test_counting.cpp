#include <doctest.h>

#include <cmath>

#include "ford/counting.hpp"
#include "ford/sequences.hpp"

using namespace ford;
using namespace ford::counting;

TEST_CASE("jump values") {
    for (i64 p : {2, 3, 5, 7, 97, 991}) CHECK(jump(p).s_m == 1);  // 2^0
    CHECK(jump(30).s_m == 4);                                     // three primes, 2^2
    CHECK(jump(4).s_m == 1);                                      // omega(4) = 1
    CHECK(jump(1).s_m == 1);                                      // special case
    CHECK(jump(1).omega_m == 0);
    CHECK_THROWS_AS(jump(0), std::domain_error);
}

TEST_CASE("cardinality formulas") {
    CHECK(cardinality_exact(32) == 48);
    CHECK(cardinality_exact(1) == 2);
    CHECK(cardinality_exact(6) == 8);
    CHECK(cardinality_mobius(32) == 48);
    CHECK(cardinality_mobius(2) == 3);
    CHECK(cardinality_mobius(1) == 2);
}

TEST_CASE("cardinality routes agree with extraction") {
    arith::SieveTables t = arith::build_sieves(2000);
    std::vector<i64> sweep = cardinality_sweep(2000, &t);
    for (i64 m = 1; m <= 2000; ++m) {
        CHECK(sweep[m] == sequences::origin_count(m));
        if (m % 97 == 0 || m <= 16) {
            CHECK(cardinality_exact(m, &t) == sweep[m]);
            CHECK(cardinality_mobius(m, &t) == sweep[m]);
        }
    }
}

TEST_CASE("jumps are consistent powers of two") {
    arith::SieveTables t = arith::build_sieves(10000);
    std::vector<i64> sweep = cardinality_sweep(10000, &t);
    for (i64 m = 2; m <= 10000; ++m) {
        JumpRecord rec = jump(m, &t);
        CHECK(sweep[m] - sweep[m - 1] == rec.s_m);
        CHECK((rec.s_m & (rec.s_m - 1)) == 0);
        CHECK(rec.s_m == static_cast<i64>(arith::coprime_factor_pairs(m).size()));
    }
}

TEST_CASE("largest numerator bound") {
    CHECK(s_of(32) == 5);  // 5*6 = 30 <= 32 < 42
    CHECK(s_of(2) == 1);
    CHECK_THROWS_AS(s_of(1), std::domain_error);
    for (i64 s = 1; s <= 1000; ++s) {
        CHECK(s_of(s * (s + 1)) == s);          // exact boundary
        CHECK(s_of(s * (s + 1) + 1) == s);      // just past it
        if (s > 1) CHECK(s_of(s * (s + 1) - 1) == s - 1);
    }
    // matches the largest numerator actually extracted
    for (i64 m = 2; m <= 500; ++m) {
        i64 max_p = 0;
        for (const auto& f : sequences::extract_origin(m).fractions)
            max_p = std::max(max_p, f.p);
        CHECK(s_of(m) == max_p);
    }
}

TEST_CASE("lattice region counts") {
    RegionCount rc = lattice_region_count(32);
    CHECK(rc.s == 5);
    CHECK(rc.total_points == 62);  // 32 + 15 + 8 + 5 + 2
    CHECK(rc.visible_points == 47);

    RegionCount rc2 = lattice_region_count(2);
    CHECK(rc2.total_points == 2);  // (1,1), (1,2)
    CHECK(rc2.visible_points == 2);

    arith::SieveTables t = arith::build_sieves(2000);
    std::vector<i64> sweep = cardinality_sweep(2000, &t);
    for (i64 m = 2; m <= 2000; m += 7) {
        RegionCount r = lattice_region_count(m);
        CHECK(r.visible_points == sweep[m] - 1);
        CHECK(r.visible_points <= r.total_points);
    }

    // density of visible points drifts toward 6/pi^2
    RegionCount big = lattice_region_count(100000);
    double ratio = static_cast<double>(big.visible_points) / static_cast<double>(big.total_points);
    CHECK(std::abs(ratio - 0.6079271) < 0.01);
}

TEST_CASE("visible ratio in the square") {
    CHECK(visible_ratio(1) == 1.0);
    CHECK(std::abs(visible_ratio(100) - 0.6079271) < 0.01);
    CHECK(std::abs(visible_ratio(1000) - 0.6079271) < 0.002);
    CHECK_THROWS_AS(visible_ratio(0), std::domain_error);
}

TEST_CASE("jumps csv") {
    std::string csv = jumps_csv(2, 6);
    CHECK(csv ==
          "m,omega,jump,cardinality\n"
          "2,1,1,3\n"
          "3,1,1,4\n"
          "4,1,1,5\n"
          "5,1,1,6\n"
          "6,2,2,8\n");
    CHECK_THROWS_AS(jumps_csv(6, 2), std::domain_error);
}
