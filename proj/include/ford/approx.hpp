#pragma once

#include <array>
#include <string>
#include <vector>

#include "ford/arith.hpp"
#include "ford/numeric.hpp"

namespace ford::approx {

using arith::SieveTables;

// All three approximations share the shape m/(2 zeta(2)) (ln m + alpha) + beta.
struct Coefficients {
    Real alpha;
    Real beta;
};

Coefficients coefficients_a1();  // alpha = 1 + 2C - 2A zeta(2), beta = 2
Coefficients coefficients_a2();  // alpha = 2C - 1,               beta = 1 + 1/zeta(2)
Coefficients coefficients_a3();  // alpha = 1,                    beta = 0

Real common_form(i64 m, const Coefficients& c);

// Throw std::domain_error for m < 2.
Real a1(i64 m);
Real a2(i64 m);
Real a3(i64 m);

// Partial sum of phi(p)/p^2 for p <= s, exact rational plus the estimate
// (ln s + C)/zeta(2) - A.
struct RationalSum {
    Rational exact;
    Real asymptotic;
};

RationalSum sum_phi_over_p2(i64 s);

// Totient summatory function for p <= s, exact plus s^2/(2 zeta(2)).
struct IntegerSum {
    i64 exact;
    Real asymptotic;
};

IntegerSum sum_phi(i64 s);

// Tail over sqrt(m) < q <= m of phi(q)/q^2, exact plus ln(m)/(2 zeta(2)).
// Requires m >= 4.
RationalSum sum_phi_over_p2_tail(i64 m);

Rational harmonic(i64 s);  // exact H_s
i64 triangular(i64 s);     // s(s+1)/2

struct ApproxReport {
    i64 m;
    i64 exact;
    double a1, a2, a3;
    double err1, err2, err3;        // exact - a_i
    double ratio1, ratio2, ratio3;  // |err_i| / sqrt(m)
};

struct ReportSummary {
    std::vector<ApproxReport> rows;
    std::array<double, 3> max_ratio{};
    std::array<double, 3> mean_abs_err{};
    int best = 0;  // 1-based index of the smallest mean absolute error
};

// Per-m reports over {from, from+step, ...} <= to. Requires 2 <= from <= to.
ReportSummary error_report(i64 from, i64 to, i64 step = 1,
                           const SieveTables* tables = nullptr);

// CSV with header m,exact,a1,a2,a3,err1,err2,err3,ratio1,ratio2,ratio3,
// then a "# best=aK ..." summary line.
std::string report_csv(const ReportSummary& summary);

// Regression envelopes: largest deviation-to-envelope ratio over s in
// [lo, hi]. The running sums are accumulated at full Real precision, so
// accumulation noise sits ~40 orders below the measured deviations.
double totient_density_envelope_max(i64 lo, i64 hi);    // |sum phi/p^2 - est| / (ln s / s)
double totient_summatory_envelope_max(i64 lo, i64 hi);  // |sum phi - est| / (s ln s)

}  // namespace ford::approx
