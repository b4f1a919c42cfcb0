#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ford/numeric.hpp"

namespace ford::arith {

// phi / mu / omega tables for 1..limit, immutable after construction.
struct SieveTables {
    i64 limit = 0;
    std::vector<std::uint32_t> phi;
    std::vector<std::int8_t> mu;
    std::vector<std::uint8_t> omega;

    bool covers(i64 n) const { return n >= 1 && n <= limit; }
};

inline constexpr i64 kDefaultSieveLimit = 1'000'000;
// ~6 bytes per entry; keeps a misconfigured FORD_SIEVE_LIMIT from eating the machine.
inline constexpr i64 kMaxSieveLimit = i64{1} << 28;

// Linear sieve; throws std::length_error past kMaxSieveLimit.
SieveTables build_sieves(i64 n);

// mu only, for summations that need a large range without the full tables.
std::vector<std::int8_t> mobius_sieve(i64 n);

// Single-value fallbacks (trial division), used past the sieve limit.
i64 euler_phi(i64 n);
int mobius(i64 n);
int omega(i64 n);

// Sieve-aware accessors: table lookup when covered, trial division otherwise.
i64 phi_of(i64 n, const SieveTables* tables = nullptr);
int mobius_of(i64 n, const SieveTables* tables = nullptr);
int omega_of(i64 n, const SieveTables* tables = nullptr);

// All divisors of m, ascending.
std::vector<i64> divisors(i64 m);

// All (p, q) with p*q = m, gcd(p, q) = 1, p <= q, ascending in p.
// Brute-force oracle for the jump values.
std::vector<std::pair<i64, i64>> coprime_factor_pairs(i64 m);

// |{ j <= x : gcd(j, n) = 1 }| via sum over squarefree divisors of n of
// mu(d) * floor(x/d).
i64 phi_x(i64 x, i64 n);

struct Constants {
    Real zeta2;    // pi^2 / 6
    Real euler_c;  // Euler-Mascheroni constant
    Real A;        // frozen partial sum of mu(n) ln(n) / n^2, see constant_A
};

const Constants& constants();

// Partial sum over n <= terms of mu(n) ln(n) / n^2. Truncation error is
// bounded by sum_{n > N} ln(n)/n^2 < (ln N + 1)/N; the Kahan-compensated
// accumulation contributes far less than that.
Real constant_A(i64 terms);

// 1 + 2C - 2*A*zeta(2), the additive constant of the first approximation.
Real alpha1_coefficient();

}  // namespace ford::arith
