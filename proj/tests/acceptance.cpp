// Acceptance gate: each numbered check prints one [PASS]/[FAIL] line with the
// measured quantities, and the exit code is the number of failed checks.
// Tolerances and reference values are pinned here, in code. Checks that fail
// do so loudly with the measured value; bounds are never widened to make a
// check pass.

#include "melonlab/gauss.hpp"
#include "melonlab/limits.hpp"
#include "melonlab/melon.hpp"
#include "melonlab/oracle.hpp"
#include "melonlab/real.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace melonlab;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& text) {
    std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string f6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

double dbl(const Real& x) { return x.convert_to<double>(); }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

template <typename F>
void criterion(int id, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("unexpected exception: ") + e.what());
    }
}

void run_1() {
    Timer t;
    unsigned mismatches = 0;
    for (unsigned p = 1; p <= 6; ++p)
        for (unsigned long n = 0; n <= 100; ++n)
            if (count_total({p, n}) != count_total_closed({p, n})) ++mismatches;
    const double el = t.s();
    report(1, mismatches == 0 && el < 10.0,
           "determinant total vs closed-form product, p<=6 n<=100: " +
               std::to_string(mismatches) + " mismatches, " + f6(el) +
               " s (limit 10)");
}

void run_2() {
    Timer t;
    unsigned mismatches = 0;
    for (unsigned p = 1; p <= 3; ++p)
        for (unsigned long n = 0; n <= 6; ++n) {
            const MelonConfig cfg{p, n};
            const MelonStats st = stats(cfg);
            if (st.total != count_total(cfg)) ++mismatches;
            if (n == 0) continue;
            const ExactDistribution h = height_distribution(cfg);
            const auto hc = st.height_counts();
            if (h.support.size() != hc.size()) ++mismatches;
            for (std::size_t i = 0; i < h.support.size(); ++i)
                if (!hc.count(h.support[i]) || hc.at(h.support[i]) != h.count[i])
                    ++mismatches;
            const ExactDistribution r = range_distribution(cfg);
            const auto rc = st.range_counts();
            if (r.support.size() != rc.size()) ++mismatches;
            for (std::size_t i = 0; i < r.support.size(); ++i)
                if (!rc.count(r.support[i]) || rc.at(r.support[i]) != r.count[i])
                    ++mismatches;
        }
    const BigInt t22 = count_total({2, 2});
    const BigInt t21 = count_total({2, 1});
    const bool anchors = (t22 == 20) && (t21 == 3);
    report(2, mismatches == 0 && anchors,
           "exhaustive enumeration vs determinant counts and laws, p<=3 n<=6: " +
               std::to_string(mismatches) + " mismatches; totals (2,2)=" +
               t22.get_str() + " (2,1)=" + t21.get_str() + "; " + f6(t.s()) + " s");
}

void run_3() {
    Timer t;
    struct Entry {
        unsigned p, s;
        const char* frozen; // independently computed reference decimal
        double anchor;      // two-decimal display anchor
        long num, den;      // exact value when rational (den > 0)
    };
    const std::vector<Entry> table = {
        {1, 1, "0.886226925452758014", 0.88, 0, 0},
        {1, 2, "1", 1.0, 1, 1},
        {1, 3, "1.329340388179137020", 1.32, 0, 0},
        {2, 1, "1.512883994110508139", 1.51, 0, 0},
        {2, 2, "2.5", 2.5, 5, 2},
        {2, 3, "4.458013966030723656", 4.45, 0, 0},
        {3, 1, "1.992659037939174262", 1.99, 0, 0},
        {3, 2, "4.166666666666666667", 25.0 / 6, 25, 6},
        {3, 3, "9.111758964531874090", 9.11, 0, 0},
        {4, 1, "2.393197358231529618", 2.39, 0, 0},
        {4, 2, "5.910493827160493827", 1915.0 / 324, 1915, 324},
        {4, 3, "15.045063869475922435", 15.04, 0, 0},
    };
    double worst = 0, worst_anchor = 0;
    unsigned rational_misses = 0;
    for (const auto& e : table) {
        const Xi1Value v = table1_coefficient(e.p, e.s);
        worst = std::max(worst, dbl(abs(v.to_real() - Real(e.frozen))));
        worst_anchor = std::max(worst_anchor, std::abs(dbl(v.to_real()) - e.anchor));
        if (e.den > 0 && (!v.is_rational() || v.q0 != Rational(e.num, e.den)))
            ++rational_misses;
    }
    const double el = t.s();
    report(3,
           worst <= 1e-9 && worst_anchor <= 0.01 && rational_misses == 0 &&
               el < 5.0,
           "leading moment coefficients, 12 entries: max |dev| from reference " +
               f6(worst) + " (bound 1e-9), max anchor dev " + f6(worst_anchor) +
               ", rational misses " + std::to_string(rational_misses) + ", " +
               f6(el) + " s (limit 5)");
}

void run_4() {
    unsigned tau_misses = 0, hankel_misses = 0, parity_misses = 0;
    for (unsigned p = 1; p <= 6; ++p) {
        if (!(tau(p) == kappa(p).diff().scaled(p - 1))) ++tau_misses;
        const GaussExpr k = kappa(p);
        if (k.has_pure_polynomial_part()) ++parity_misses;
        for (const auto& term : k.terms())
            if (term.a % 2 != 0) ++parity_misses;
    }
    for (unsigned p = 1; p <= 8; ++p)
        if (hankel_det(p) != hankel_closed(p)) ++hankel_misses;
    report(4, tau_misses + hankel_misses + parity_misses == 0,
           "symbolic identities: tau=(p-1)dkappa/dh misses " +
               std::to_string(tau_misses) + " (p<=6), hankel misses " +
               std::to_string(hankel_misses) +
               " (p<=8), kappa parity/constant misses " +
               std::to_string(parity_misses));
}

void run_5() {
    double worst = 0;
    unsigned exact_misses = 0;
    for (unsigned p = 1; p <= 6; ++p) {
        const Xi1Value v1 = xi1_exact(tau(p));
        if (!v1.is_rational() || v1.q0 != Rational(1) - Rational(p)) ++exact_misses;
        worst = std::max(worst, dbl(abs(xi1(tau(p)) - (Real(1) - Real(p)))));
        if (xi0(kappa(p)) != Rational(-1, 2)) ++exact_misses;
    }
    report(5, worst <= 1e-12 && exact_misses == 0,
           "operator identities Xi1(tau_p)=1-p, Xi0(kappa_p)=-1/2 for p<=6: max "
           "numeric dev " +
               f6(worst) + " (bound 1e-12), exact misses " +
               std::to_string(exact_misses));
}

void run_6() {
    double worst = 0;
    for (unsigned nu = 0; nu <= 4; ++nu)
        for (unsigned mu = 1; mu <= 3; ++mu)
            for (unsigned long n : {100ul, 1000ul, 10000ul}) {
                const Real d =
                    abs(f_sum_numeric(nu, mu, n) - f_sum_asymptotic(nu, mu, n, 1));
                worst = std::max(worst, dbl(d) * double(n) * double(n));
            }
    const double m0_num = dbl(f_sum_numeric(0, 1, 100));
    const double m0_asy = dbl(f_sum_asymptotic(0, 1, 100, 0));
    const bool anchors =
        std::abs(m0_num - 8.3623) <= 0.01 && std::abs(m0_asy - 8.3623) <= 0.01;
    report(6, worst <= 1.0 && anchors,
           "harmonic-sum asymptotics, nu<=4 mu<=3 n up to 1e4: max |num-asym(M=1)|"
           "*n^2 = " +
               f6(worst) + " (bound 1), M=0 values " + f6(m0_num) + " / " +
               f6(m0_asy) + " (anchor 8.3623 +- 0.01)");
}

void run_7() {
    Timer t;
    std::vector<double> grid;
    for (int i = 10; i <= 40; ++i) grid.push_back(i / 10.0);
    std::vector<Real> limit;
    limit.reserve(grid.size());
    for (double tv : grid) limit.push_back(height_limit_cdf(3, Real(tv)));
    auto sup_gap = [&](unsigned long n) {
        const MelonConfig cfg{3, n};
        Real sup(0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Rational exact = height_exact_scaled_cdf(cfg, Real(grid[i]));
            sup = std::max(sup, Real(abs(to_real(exact) - limit[i])));
        }
        return dbl(sup);
    };
    const double sup50 = sup_gap(50);
    const double sup250 = sup_gap(250);
    const double el = t.s();
    report(7, sup250 <= 0.05 && sup250 < sup50 && el < 60.0,
           "height exact-vs-limit, p=3, t in [1,4] step 0.1: sup gap n=250 = " +
               f6(sup250) + " (bound 0.05), n=50 = " + f6(sup50) +
               " (must decrease), " + f6(el) + " s (limit 60)");
}

void run_8() {
    double worst1 = 0, worst2 = 0, worst2_refined = 0;
    for (unsigned p = 1; p <= 2; ++p)
        for (unsigned long n : {50ul, 100ul, 200ul, 400ul}) {
            const MelonConfig cfg{p, n};
            const Real e1 = to_real(height_moment_exact(cfg, 1));
            const Real e2 = to_real(height_moment_exact(cfg, 2));
            worst1 = std::max(
                worst1, dbl(abs(e1 - moment_asymptotic(p, 1, n)) * sqrt(Real(n))));
            // s = 2: remainder scaled by n^{s/2-1} = 1
            worst2 = std::max(worst2, dbl(abs(e2 - moment_asymptotic(p, 2, n))));
            worst2_refined = std::max(
                worst2_refined, dbl(abs(e2 - moment_asymptotic_corrected(p, 2, n))));
        }
    report(8, worst1 <= 2.0 && worst2 <= 5.0,
           "moment remainders, p in {1,2}, n in {50..400}: s=1 scaled max " +
               f6(worst1) + " (bound 2), s=2 scaled max " + f6(worst2) +
               " (bound 5; refined subleading coefficient gives " +
               f6(worst2_refined) + ")");
}

void run_9() {
    double worst_eq = 0;
    for (double tv : {0.5, 1.0, 1.5, 2.0, 3.0})
        worst_eq = std::max(
            worst_eq,
            dbl(abs(range_limit_cdf(1, Real(tv), 1e-10) - p1_range_closed(Real(tv)))));
    const double at1 = dbl(p1_range_closed(Real(1)));
    const bool ok_anchor = std::abs(at1 - 0.2685) <= 1e-4;
    report(9, worst_eq <= 1e-8 && ok_anchor,
           "p=1 range limit: quadrature vs closed form max |diff| " + f6(worst_eq) +
               " (bound 1e-8); closed form at t=1 is " + f6(at1) +
               " vs pinned anchor 0.2685 +- 1e-4");
}

void run_10() {
    std::vector<double> grid;
    for (int i = 0; i <= 35; ++i) grid.push_back(0.5 + 0.1 * i);
    std::vector<Real> limit;
    limit.reserve(grid.size());
    for (double tv : grid) limit.push_back(range_limit_cdf(1, Real(tv), 1e-8));
    auto sup_gap = [&](unsigned long n) {
        const MelonConfig cfg{1, n};
        Real sup(0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Rational exact = range_exact_scaled_cdf(cfg, Real(grid[i]));
            sup = std::max(sup, Real(abs(to_real(exact) - limit[i])));
        }
        return dbl(sup);
    };
    const double sup100 = sup_gap(100);
    const double sup400 = sup_gap(400);
    report(10, sup400 <= 0.06 && sup400 < sup100,
           "range exact-vs-limit, p=1, t in [0.5,4] step 0.1: sup gap n=400 = " +
               f6(sup400) + " (bound 0.06), n=100 = " + f6(sup100) +
               " (must decrease)");
}

void run_11() {
    const Real d("1e-10");
    double worst_expr = 0;
    for (const GaussExpr& e : {kappa(2), kappa(3), tau(3)}) {
        const GaussExpr de = e.diff();
        for (int i = 0; i <= 16; ++i) {
            const Real h = Real(i) / 4; // 0 .. 4
            const Real fd = (e.eval(h + d) - e.eval(h - d)) / (2 * d);
            worst_expr = std::max(worst_expr, dbl(abs(de.eval(h) - fd)));
        }
    }
    double worst_T = 0;
    for (unsigned p = 1; p <= 3; ++p)
        for (double z : {0.5, 1.0, 2.0, 4.0})
            for (double frac : {0.0, 0.37, 0.82}) {
                const Real rz(z), rw(frac * z);
                const Real fd = (range_T(p, rz + d, rw, 1e-25) -
                                 range_T(p, rz - d, rw, 1e-25)) /
                                (2 * d);
                worst_T = std::max(
                    worst_T, dbl(abs(range_T_dz(p, rz, rw, 1e-25) - fd)));
            }
    report(11, worst_expr <= 1e-6 && worst_T <= 1e-6,
           "analytic derivatives vs central differences: expression max dev " +
               f6(worst_expr) + ", theta-determinant max dev " + f6(worst_T) +
               " (bounds 1e-6)");
}

} // namespace

int main() {
    criterion(1, run_1);
    criterion(2, run_2);
    criterion(3, run_3);
    criterion(4, run_4);
    criterion(5, run_5);
    criterion(6, run_6);
    criterion(7, run_7);
    criterion(8, run_8);
    criterion(9, run_9);
    criterion(10, run_10);
    criterion(11, run_11);
    std::printf("%d of 11 criteria failed\n", g_failures);
    return g_failures;
}
