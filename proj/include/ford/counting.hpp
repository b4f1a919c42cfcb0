#pragma once

#include <string>
#include <vector>

#include "ford/arith.hpp"
#include "ford/numeric.hpp"

namespace ford::counting {

using arith::SieveTables;

// Cardinality increment from slope 1/(m-1) to 1/m.
struct JumpRecord {
    i64 m;
    i64 s_m;      // 2^(omega(m)-1) for m >= 2, 1 for m = 1
    int omega_m;
};

JumpRecord jump(i64 m, const SieveTables* tables = nullptr);

// sum_{j=2..m} 2^(omega(j)-1) + 2 (empty sum at m = 1).
i64 cardinality_exact(i64 m, const SieveTables* tables = nullptr);

// (1/2) sum_{j=2..m} sum_{d|j} mu^2(d) + 2, by per-j divisor enumeration.
i64 cardinality_mobius(i64 m, const SieveTables* tables = nullptr);

// card[m] for every m in [1, m_max] (index 0 unused), one prefix pass.
std::vector<i64> cardinality_sweep(i64 m_max, const SieveTables* tables = nullptr);

// The unique s with s(s+1) <= m < (s+1)(s+2): the largest numerator
// occurring in F_{1/m}. Integer square root only. Throws for m < 2.
i64 s_of(i64 m);

// Lattice points (p, q) with 1 <= p, p <= q <= m/p, and the coprime
// ("visible") ones among them. visible_points == cardinality_exact(m) - 1.
struct RegionCount {
    i64 m;
    i64 s;
    i64 total_points;
    i64 visible_points;
};

RegionCount lattice_region_count(i64 m);

// Fraction of coprime pairs in [1, r]^2; tends to 6/pi^2 ~ 0.6079.
double visible_ratio(i64 r);

// CSV with header m,omega,jump,cardinality over [from, to].
std::string jumps_csv(i64 from, i64 to, const SieveTables* tables = nullptr);

}  // namespace ford::counting
