#pragma once

#include <cstdint>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ford {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Arbitrary-precision integer / canonical rational (den > 0, gcd(|num|,den) = 1).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// High-precision real: 50 decimal digits (~166 fraction bits).
using Real = boost::multiprecision::cpp_bin_float_50;

// gcd with an explicit contract: throws std::domain_error when both inputs are zero.
u64 gcd(u64 a, u64 b);

// floor(sqrt(n)), exact at perfect squares and their boundaries.
u64 isqrt(u64 n);

// Parses "p/q" or "p" with nonnegative integer parts; signs, decimals and
// whitespace are rejected so exact predicates never see rounded input.
Rational parse_rational(std::string_view text);

}  // namespace ford
