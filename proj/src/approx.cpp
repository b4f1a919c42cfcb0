#include "ford/approx.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ford/counting.hpp"

namespace ford::approx {

namespace {

using boost::multiprecision::gcd;

// Accumulates sums of small fractions without re-canonicalizing the full
// denominator at every step: only gcd(den, step_den) is taken, so the
// denominator grows like an lcm and stays exact.
struct RationalAccumulator {
    Int num = 0;
    Int den = 1;

    void add(i64 term_num, const Int& term_den) {
        Int g = gcd(den, term_den);
        Int scale = term_den / g;
        num = num * scale + term_num * (den / g);
        den *= scale;
    }

    Rational value() const { return Rational(num, den); }
};

std::vector<i64> phi_table(i64 s) {
    if (s <= arith::kMaxSieveLimit) {
        arith::SieveTables t = arith::build_sieves(s);
        return std::vector<i64>(t.phi.begin(), t.phi.end());
    }
    std::vector<i64> phi(static_cast<std::size_t>(s) + 1);
    for (i64 n = 1; n <= s; ++n) phi[n] = arith::euler_phi(n);
    return phi;
}

}  // namespace

Coefficients coefficients_a1() {
    const auto& c = arith::constants();
    return {1 + 2 * c.euler_c - 2 * c.A * c.zeta2, Real(2)};
}

Coefficients coefficients_a2() {
    const auto& c = arith::constants();
    return {2 * c.euler_c - 1, 1 + 1 / c.zeta2};
}

Coefficients coefficients_a3() { return {Real(1), Real(0)}; }

Real common_form(i64 m, const Coefficients& c) {
    if (m < 2) throw std::domain_error("approximations require m >= 2");
    const auto& k = arith::constants();
    return Real(m) / (2 * k.zeta2) * (log(Real(m)) + c.alpha) + c.beta;
}

Real a1(i64 m) { return common_form(m, coefficients_a1()); }
Real a2(i64 m) { return common_form(m, coefficients_a2()); }
Real a3(i64 m) { return common_form(m, coefficients_a3()); }

RationalSum sum_phi_over_p2(i64 s) {
    if (s < 1) throw std::domain_error("sum_phi_over_p2 requires s >= 1");
    std::vector<i64> phi = phi_table(s);
    RationalAccumulator acc;
    for (i64 p = 1; p <= s; ++p) acc.add(phi[p], Int(p) * p);
    const auto& c = arith::constants();
    Real asym = (log(Real(s)) + c.euler_c) / c.zeta2 - c.A;
    return {acc.value(), asym};
}

IntegerSum sum_phi(i64 s) {
    if (s < 1) throw std::domain_error("sum_phi requires s >= 1");
    std::vector<i64> phi = phi_table(s);
    i64 total = 0;
    for (i64 p = 1; p <= s; ++p) total += phi[p];
    const auto& c = arith::constants();
    return {total, Real(s) * Real(s) / (2 * c.zeta2)};
}

RationalSum sum_phi_over_p2_tail(i64 m) {
    if (m < 4) throw std::domain_error("sum_phi_over_p2_tail requires m >= 4");
    i64 root = static_cast<i64>(isqrt(static_cast<u64>(m)));
    std::vector<i64> phi = phi_table(m);
    RationalAccumulator acc;
    for (i64 q = root + 1; q <= m; ++q) acc.add(phi[q], Int(q) * q);
    const auto& c = arith::constants();
    return {acc.value(), log(Real(m)) / (2 * c.zeta2)};
}

Rational harmonic(i64 s) {
    if (s < 1) throw std::domain_error("harmonic requires s >= 1");
    RationalAccumulator acc;
    for (i64 k = 1; k <= s; ++k) acc.add(1, Int(k));
    return acc.value();
}

i64 triangular(i64 s) {
    if (s < 1) throw std::domain_error("triangular requires s >= 1");
    return s * (s + 1) / 2;
}

ReportSummary error_report(i64 from, i64 to, i64 step, const SieveTables* tables) {
    if (from < 2 || from > to) throw std::domain_error("error_report requires 2 <= from <= to");
    if (step < 1) throw std::domain_error("error_report requires step >= 1");
    std::vector<i64> card = counting::cardinality_sweep(to, tables);
    const Coefficients coef[3] = {coefficients_a1(), coefficients_a2(), coefficients_a3()};

    ReportSummary summary;
    for (i64 m = from; m <= to; m += step) {
        ApproxReport row{};
        row.m = m;
        row.exact = card[m];
        double* vals[3] = {&row.a1, &row.a2, &row.a3};
        double* errs[3] = {&row.err1, &row.err2, &row.err3};
        double* ratios[3] = {&row.ratio1, &row.ratio2, &row.ratio3};
        Real sqrt_m = sqrt(Real(m));
        for (int i = 0; i < 3; ++i) {
            Real v = common_form(m, coef[i]);
            Real err = Real(row.exact) - v;
            *vals[i] = v.convert_to<double>();
            *errs[i] = err.convert_to<double>();
            *ratios[i] = (abs(err) / sqrt_m).convert_to<double>();
            summary.max_ratio[i] = std::max(summary.max_ratio[i], *ratios[i]);
            summary.mean_abs_err[i] += std::abs(*errs[i]);
        }
        summary.rows.push_back(row);
    }
    for (int i = 0; i < 3; ++i) summary.mean_abs_err[i] /= static_cast<double>(summary.rows.size());
    summary.best = 1;
    for (int i = 1; i < 3; ++i) {
        if (summary.mean_abs_err[i] < summary.mean_abs_err[summary.best - 1]) summary.best = i + 1;
    }
    return summary;
}

std::string report_csv(const ReportSummary& summary) {
    std::string s = "m,exact,a1,a2,a3,err1,err2,err3,ratio1,ratio2,ratio3\n";
    char buf[512];
    for (const ApproxReport& r : summary.rows) {
        std::snprintf(buf, sizeof buf,
                      "%lld,%lld,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                      static_cast<long long>(r.m), static_cast<long long>(r.exact), r.a1, r.a2,
                      r.a3, r.err1, r.err2, r.err3, r.ratio1, r.ratio2, r.ratio3);
        s += buf;
    }
    std::snprintf(buf, sizeof buf, "# best=a%d mae_a1=%.6f mae_a2=%.6f mae_a3=%.6f\n",
                  summary.best, summary.mean_abs_err[0], summary.mean_abs_err[1],
                  summary.mean_abs_err[2]);
    s += buf;
    return s;
}

double totient_density_envelope_max(i64 lo, i64 hi) {
    if (lo < 2 || lo > hi) throw std::domain_error("envelope sweep requires 2 <= lo <= hi");
    std::vector<i64> phi = phi_table(hi);
    const auto& c = arith::constants();
    Real running = 0;
    double worst = 0;
    for (i64 s = 1; s <= hi; ++s) {
        running += Real(phi[s]) / (Real(s) * Real(s));
        if (s < lo) continue;
        Real est = (log(Real(s)) + c.euler_c) / c.zeta2 - c.A;
        Real envelope = log(Real(s)) / Real(s);
        worst = std::max(worst, (abs(running - est) / envelope).convert_to<double>());
    }
    return worst;
}

double totient_summatory_envelope_max(i64 lo, i64 hi) {
    if (lo < 2 || lo > hi) throw std::domain_error("envelope sweep requires 2 <= lo <= hi");
    std::vector<i64> phi = phi_table(hi);
    const auto& c = arith::constants();
    i64 running = 0;
    double worst = 0;
    for (i64 s = 1; s <= hi; ++s) {
        running += phi[s];
        if (s < lo) continue;
        Real est = Real(s) * Real(s) / (2 * c.zeta2);
        Real envelope = Real(s) * log(Real(s));
        worst = std::max(worst, (abs(Real(running) - est) / envelope).convert_to<double>());
    }
    return worst;
}

}  // namespace ford::approx
