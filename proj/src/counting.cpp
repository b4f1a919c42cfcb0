#include "ford/counting.hpp"

#include <numeric>
#include <stdexcept>

namespace ford::counting {

JumpRecord jump(i64 m, const SieveTables* tables) {
    if (m < 1) throw std::domain_error("jump requires m >= 1");
    JumpRecord rec{m, 1, 0};
    if (m >= 2) {
        rec.omega_m = arith::omega_of(m, tables);
        rec.s_m = i64{1} << (rec.omega_m - 1);
    }
#ifdef FORD_FAULT_JUMP_OFF_BY_ONE
    rec.s_m += 1;  // fault injection for the mutation test build only
#endif
    return rec;
}

i64 cardinality_exact(i64 m, const SieveTables* tables) {
    if (m < 1) throw std::domain_error("cardinality_exact requires m >= 1");
    i64 total = 2;
    for (i64 j = 2; j <= m; ++j) total += i64{1} << (arith::omega_of(j, tables) - 1);
    return total;
}

i64 cardinality_mobius(i64 m, const SieveTables* tables) {
    if (m < 1) throw std::domain_error("cardinality_mobius requires m >= 1");
    i64 twice_sum = 0;
    for (i64 j = 2; j <= m; ++j) {
        for (i64 d : arith::divisors(j)) {
            int mu = arith::mobius_of(d, tables);
            twice_sum += mu * mu;
        }
    }
    if (twice_sum % 2 != 0) throw std::logic_error("mu^2 divisor sum must be even for m >= 2");
    return twice_sum / 2 + 2;
}

std::vector<i64> cardinality_sweep(i64 m_max, const SieveTables* tables) {
    if (m_max < 1) throw std::domain_error("cardinality_sweep requires m_max >= 1");
    std::vector<i64> card(static_cast<std::size_t>(m_max) + 1, 0);
    card[1] = 2;
    for (i64 m = 2; m <= m_max; ++m)
        card[m] = card[m - 1] + (i64{1} << (arith::omega_of(m, tables) - 1));
    return card;
}

i64 s_of(i64 m) {
    if (m < 2) throw std::domain_error("s_of requires m >= 2");
    i64 s = (static_cast<i64>(isqrt(static_cast<u64>(4 * m + 1))) - 1) / 2;
    // s(s+1) <= m < (s+1)(s+2) by construction; cheap to re-check.
    if (!(s * (s + 1) <= m && m < (s + 1) * (s + 2)))
        throw std::logic_error("s_of boundary miss");
    return s;
}

RegionCount lattice_region_count(i64 m) {
    if (m < 2) throw std::domain_error("lattice_region_count requires m >= 2");
    RegionCount rc{m, s_of(m), 0, 0};
    for (i64 p = 1; p <= rc.s; ++p) {
        i64 q_hi = m / p;
        rc.total_points += q_hi - p + 1;
        for (i64 q = p; q <= q_hi; ++q) {
            if (std::gcd(p, q) == 1) ++rc.visible_points;
        }
    }
    return rc;
}

double visible_ratio(i64 r) {
    if (r < 1) throw std::domain_error("visible_ratio requires r >= 1");
    i64 visible = 0;
    for (i64 x = 1; x <= r; ++x) {
        for (i64 y = 1; y <= r; ++y) {
            if (std::gcd(x, y) == 1) ++visible;
        }
    }
    return static_cast<double>(visible) / (static_cast<double>(r) * static_cast<double>(r));
}

std::string jumps_csv(i64 from, i64 to, const SieveTables* tables) {
    if (from < 1 || from > to) throw std::domain_error("jumps_csv requires 1 <= from <= to");
    std::vector<i64> card = cardinality_sweep(to, tables);
    std::string s = "m,omega,jump,cardinality\n";
    for (i64 m = from; m <= to; ++m) {
        JumpRecord rec = jump(m, tables);
        s += std::to_string(m) + "," + std::to_string(rec.omega_m) + "," +
             std::to_string(rec.s_m) + "," + std::to_string(card[m]) + "\n";
    }
    return s;
}

}  // namespace ford::counting
