#include "ford/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace ford::arith {

SieveTables build_sieves(i64 n) {
    if (n < 1) throw std::domain_error("sieve limit must be >= 1");
    if (n > kMaxSieveLimit) throw std::length_error("sieve limit exceeds memory budget");

    SieveTables t;
    t.limit = n;
    t.phi.assign(static_cast<std::size_t>(n) + 1, 0);
    t.mu.assign(static_cast<std::size_t>(n) + 1, 0);
    t.omega.assign(static_cast<std::size_t>(n) + 1, 0);

    std::vector<std::uint32_t> lp(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint32_t> primes;
    t.phi[1] = 1;
    t.mu[1] = 1;
    for (i64 i = 2; i <= n; ++i) {
        if (lp[i] == 0) {
            lp[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            t.phi[i] = static_cast<std::uint32_t>(i - 1);
            t.mu[i] = -1;
            t.omega[i] = 1;
        }
        for (std::uint32_t p : primes) {
            if (p > lp[i] || i * p > n) break;
            i64 ip = i * p;
            lp[ip] = p;
            if (i % p == 0) {
                t.phi[ip] = t.phi[i] * p;
                t.mu[ip] = 0;
                t.omega[ip] = t.omega[i];
            } else {
                t.phi[ip] = t.phi[i] * (p - 1);
                t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
                t.omega[ip] = static_cast<std::uint8_t>(t.omega[i] + 1);
            }
        }
    }
    return t;
}

std::vector<std::int8_t> mobius_sieve(i64 n) {
    if (n < 1) throw std::domain_error("sieve limit must be >= 1");
    std::vector<std::int8_t> mu(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint32_t> lp(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint32_t> primes;
    mu[1] = 1;
    for (i64 i = 2; i <= n; ++i) {
        if (lp[i] == 0) {
            lp[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (p > lp[i] || i * p > n) break;
            lp[i * p] = p;
            mu[i * p] = (i % p == 0) ? std::int8_t{0} : static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

namespace {

// Distinct prime factors of n by trial division.
std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> ps;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

i64 euler_phi(i64 n) {
    if (n < 1) throw std::domain_error("phi(n) requires n >= 1");
    i64 result = n;
    for (i64 p : prime_factors(n)) result -= result / p;
    return result;
}

int mobius(i64 n) {
    if (n < 1) throw std::domain_error("mu(n) requires n >= 1");
    int k = 0;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            ++k;
        }
    }
    if (n > 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}

int omega(i64 n) {
    if (n < 1) throw std::domain_error("omega(n) requires n >= 1");
    return static_cast<int>(prime_factors(n).size());
}

i64 phi_of(i64 n, const SieveTables* tables) {
    if (tables && tables->covers(n)) return tables->phi[n];
    return euler_phi(n);
}

int mobius_of(i64 n, const SieveTables* tables) {
    if (tables && tables->covers(n)) return tables->mu[n];
    return mobius(n);
}

int omega_of(i64 n, const SieveTables* tables) {
    if (tables && tables->covers(n)) return tables->omega[n];
    return omega(n);
}

std::vector<i64> divisors(i64 m) {
    if (m < 1) throw std::domain_error("divisors(m) requires m >= 1");
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<i64, i64>> coprime_factor_pairs(i64 m) {
    if (m < 1) throw std::domain_error("coprime_factor_pairs(m) requires m >= 1");
    std::vector<std::pair<i64, i64>> pairs;
    for (i64 p = 1; p * p <= m; ++p) {
        if (m % p != 0) continue;
        i64 q = m / p;
        if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    }
    return pairs;  // ascending in p by construction
}

i64 phi_x(i64 x, i64 n) {
    if (x < 1 || n < 1) throw std::domain_error("phi_x requires x >= 1, n >= 1");
    std::vector<i64> ps = prime_factors(n);
    // Squarefree divisors of n, one per subset of its prime factors.
    i64 total = 0;
    const std::size_t subsets = std::size_t{1} << ps.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        i64 d = 1;
        int bits = 0;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                d *= ps[i];
                ++bits;
            }
        }
        total += (bits % 2 == 0 ? 1 : -1) * (x / d);
    }
    return total;
}

namespace {

// Partial sum of mu(n) ln(n) / n^2 at N = 10^7, frozen for reproducible
// approximation coefficients. Truncation bound (ln N + 1)/N ~ 1.7e-6;
// the observed drift from N = 10^6 to 10^7 is ~2.4e-9.
const char* kFrozenAString = "-0.34649473454262843164";

}  // namespace

const Constants& constants() {
    static const Constants c = [] {
        Constants k;
        k.zeta2 = boost::math::constants::pi<Real>() * boost::math::constants::pi<Real>() / 6;
        k.euler_c = boost::math::constants::euler<Real>();
        k.A = Real(kFrozenAString);
        return k;
    }();
    return c;
}

Real constant_A(i64 terms) {
    if (terms < 1) throw std::domain_error("constant_A requires terms >= 1");
    std::vector<std::int8_t> mu = mobius_sieve(terms);
    // Kahan-compensated accumulation in long double; the compensation error
    // sits ~10 orders below the truncation bound documented in the header.
    long double sum = 0.0L, comp = 0.0L;
    for (i64 n = 2; n <= terms; ++n) {
        if (mu[n] == 0) continue;
        long double nn = static_cast<long double>(n);
        long double term = static_cast<long double>(mu[n]) * std::log(nn) / (nn * nn);
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return Real(sum);
}

Real alpha1_coefficient() {
    const Constants& c = constants();
    return 1 + 2 * c.euler_c - 2 * c.A * c.zeta2;
}

}  // namespace ford::arith
