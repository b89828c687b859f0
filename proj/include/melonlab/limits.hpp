#pragma once
// Numeric evaluation of the limiting height and range CDFs, the p = 1 closed
// forms, and the exact-vs-limit comparison harness.
//
// Scaling conventions (used consistently everywhere):
//   height: P{(H+1)/sqrt(n) <= t} is read exactly as m_{n,floor(t sqrt n)} / m_n
//   range:  P{(R+1)/sqrt(n) <= t} is read exactly as P{R <= floor(t sqrt n) - 1}

#include "melonlab/bigint.hpp"
#include "melonlab/melon.hpp"
#include "melonlab/real.hpp"

#include <vector>

namespace melonlab {

// Limiting height CDF: 2^{-C(p,2)}/prod j! * det((-1)^i H_{i+j}(0)
// - H_{i+j}(t) e^{-t^2}); equals 1 - kappa_p evaluated at t.
Real height_limit_cdf(unsigned p, const Real& t);

// Theta-like sum  sum_{l in Z} H_a(l z + w) e^{-(l z + w)^2}, truncated to
// |l z + w| <= sqrt(ln(1/eps)) + a + 1 (Gaussian tail bound; one extra unit
// absorbs the polynomial factor).
Real theta_sum(unsigned a, const Real& z, const Real& w, double eps);

// T_p(z, w) = det((-1)^i theta_{i+j}(z, 0) - theta_{i+j}(z, w)) and its
// z-derivative. The derivative is analytic: d/dx [H_a(x) e^{-x^2}] =
// -H_{a+1}(x) e^{-x^2} termwise with chain factor l, combined row-by-row
// (derivative of a determinant = sum over rows of row-replaced determinants).
Real range_T(unsigned p, const Real& z, const Real& w, double eps);
Real range_T_dz(unsigned p, const Real& z, const Real& w, double eps);

// Limiting range CDF: 2^{-C(p,2)}/prod i! * int_0^t (d/dz T_p(z,w)|_{z=t}) dw
// by adaptive Simpson quadrature with absolute tolerance eps/2.
Real range_limit_cdf(unsigned p, const Real& t, double eps = 1e-10);

// p = 1 closed form  sum_{l in Z} (1 - 2 (l t)^2) e^{-(l t)^2}.
Real p1_range_closed(const Real& t);

// (C(2n,n+m)/C(2n,n), e^{-m^2/n}): exact binomial ratio vs its leading
// Gaussian approximation.
std::pair<Real, Real> gaussian_ratio_check(unsigned long n, long m);

// Exact finite-n CDF values under the scaling conventions above.
Rational height_exact_scaled_cdf(const MelonConfig& cfg, const Real& t);
Rational range_exact_scaled_cdf(const MelonConfig& cfg, const Real& t);

enum class Stat { height, range };

struct CompareRow {
    double t;
    Rational exact;
    Real limit;
    Real abs_err;
};

// Exact CDF vs limit curve on a t-grid.
std::vector<CompareRow> convergence_report(Stat stat, const MelonConfig& cfg,
                                           const std::vector<double>& t_grid,
                                           double eps = 1e-8);

} // namespace melonlab
