#include "melonlab/limits.hpp"

#include "melonlab/gauss.hpp"
#include "melonlab/special.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace melonlab {

namespace {

// 2^{-C(p,2)} / prod_{j=0}^{p-1} j!
Real limit_prefactor(unsigned p) {
    Rational c(1);
    for (unsigned j = 1; j < p; ++j) {
        c /= (BigInt(1) << j); // 2^j, telescopes to 2^{C(p,2)}
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), j);
        c /= f;
    }
    return to_real(c);
}

Real det_real(std::vector<std::vector<Real>> a) {
    const std::size_t n = a.size();
    Real det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
        if (a[piv][c] == 0) return Real(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Real f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

struct ThetaCtx {
    std::vector<HermitePoly> herm; // degrees 0 .. 2p-1 (+1 for derivatives)
    explicit ThetaCtx(unsigned max_deg) {
        herm.reserve(max_deg + 1);
        for (unsigned k = 0; k <= max_deg; ++k) herm.push_back(hermite(k));
    }

    // Truncation window for sum_l g(l z + w): keep |l z + w| <= L.
    static long ell_lo(const Real& z, const Real& w, double L) {
        return static_cast<long>(ceil(Real((-L - w) / z)).convert_to<double>());
    }
    static long ell_hi(const Real& z, const Real& w, double L) {
        return static_cast<long>(floor(Real((L - w) / z)).convert_to<double>());
    }

    Real sum(unsigned a, const Real& z, const Real& w, double L) const {
        Real acc(0);
        for (long l = ell_lo(z, w, L); l <= ell_hi(z, w, L); ++l) {
            const Real x = Real(l) * z + w;
            acc += herm[a].eval(x) * exp(-x * x);
        }
        return acc;
    }

    // d/dz of sum(a, z, w): each term picks up chain factor l, and
    // d/dx [H_a(x) e^{-x^2}] = -H_{a+1}(x) e^{-x^2}.
    Real sum_dz(unsigned a, const Real& z, const Real& w, double L) const {
        Real acc(0);
        for (long l = ell_lo(z, w, L); l <= ell_hi(z, w, L); ++l) {
            if (l == 0) continue;
            const Real x = Real(l) * z + w;
            acc -= Real(l) * herm[a + 1].eval(x) * exp(-x * x);
        }
        return acc;
    }
};

double window(unsigned max_deg, double eps) {
    if (eps <= 0 || eps >= 1) eps = 1e-12;
    return std::sqrt(std::log(1.0 / eps)) + max_deg + 1;
}

void check_range_args(unsigned p, const Real& z, const Real& w) {
    if (p == 0) throw std::domain_error("range_T: p must be >= 1");
    if (p > 8) throw capacity_error("range_T: p > 8 not supported");
    if (z <= 0) throw std::domain_error("range_T: z must be positive");
    if (w < 0 || w > z) throw std::domain_error("range_T: need 0 <= w <= z");
}

// Simpson's rule value on [a,b] given endpoint/midpoint evaluations.
Real simpson(const Real& fa, const Real& fm, const Real& fb, const Real& h) {
    return h / 6 * (fa + 4 * fm + fb);
}

template <typename F>
Real adaptive_simpson(const F& f, const Real& a, const Real& b, const Real& fa,
                      const Real& fm, const Real& fb, const Real& whole,
                      double tol, int depth) {
    const Real m = (a + b) / 2;
    const Real lm = (a + m) / 2, rm = (m + b) / 2;
    const Real flm = f(lm), frm = f(rm);
    const Real left = simpson(fa, flm, fm, m - a);
    const Real right = simpson(fm, frm, fb, b - m);
    const Real delta = left + right - whole;
    if (depth <= 0 || abs(delta) <= 15 * tol)
        return left + right + delta / 15;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

template <typename F>
Real integrate(const F& f, const Real& a, const Real& b, double tol) {
    if (b <= a) return Real(0);
    const Real m = (a + b) / 2;
    const Real fa = f(a), fm = f(m), fb = f(b);
    const Real whole = simpson(fa, fm, fb, b - a);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

} // namespace

Real height_limit_cdf(unsigned p, const Real& t) {
    if (p == 0) throw std::domain_error("height_limit_cdf: p must be >= 1");
    if (p > 8) throw capacity_error("height_limit_cdf: p > 8 not supported");
    if (t <= 0) throw std::domain_error("height_limit_cdf: t must be positive");
    const Real e = exp(-t * t);
    std::vector<HermitePoly> herm;
    for (unsigned k = 0; k <= 2 * (p - 1); ++k) herm.push_back(hermite(k));
    std::vector<std::vector<Real>> a(p, std::vector<Real>(p));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            const Real sign = (i % 2 == 0) ? Real(1) : Real(-1);
            a[i][j] = sign * to_real(hermite_zero(i + j)) - herm[i + j].eval(t) * e;
        }
    return limit_prefactor(p) * det_real(std::move(a));
}

Real theta_sum(unsigned a, const Real& z, const Real& w, double eps) {
    if (z <= 0) throw std::domain_error("theta_sum: z must be positive");
    ThetaCtx ctx(a);
    return ctx.sum(a, z, w, window(a, eps));
}

Real range_T(unsigned p, const Real& z, const Real& w, double eps) {
    check_range_args(p, z, w);
    const unsigned max_deg = 2 * (p - 1);
    ThetaCtx ctx(max_deg + 1);
    const double L = window(max_deg, eps);
    std::vector<std::vector<Real>> a(p, std::vector<Real>(p));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            const Real sign = (i % 2 == 0) ? Real(1) : Real(-1);
            a[i][j] = sign * ctx.sum(i + j, z, Real(0), L) - ctx.sum(i + j, z, w, L);
        }
    return det_real(std::move(a));
}

Real range_T_dz(unsigned p, const Real& z, const Real& w, double eps) {
    check_range_args(p, z, w);
    const unsigned max_deg = 2 * (p - 1);
    ThetaCtx ctx(max_deg + 1);
    const double L = window(max_deg + 1, eps);

    std::vector<std::vector<Real>> base(p, std::vector<Real>(p));
    std::vector<std::vector<Real>> dz(p, std::vector<Real>(p));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            const Real sign = (i % 2 == 0) ? Real(1) : Real(-1);
            base[i][j] = sign * ctx.sum(i + j, z, Real(0), L) - ctx.sum(i + j, z, w, L);
            dz[i][j] = sign * ctx.sum_dz(i + j, z, Real(0), L) - ctx.sum_dz(i + j, z, w, L);
        }

    Real acc(0);
    for (unsigned r = 0; r < p; ++r) {
        std::vector<std::vector<Real>> m = base;
        m[r] = dz[r];
        acc += det_real(std::move(m));
    }
    return acc;
}

Real range_limit_cdf(unsigned p, const Real& t, double eps) {
    if (p == 0) throw std::domain_error("range_limit_cdf: p must be >= 1");
    if (p > 8) throw capacity_error("range_limit_cdf: p > 8 not supported");
    if (t <= 0) throw std::domain_error("range_limit_cdf: t must be positive");
    if (eps <= 0) eps = 1e-10;
    const auto f = [&](const Real& w) { return range_T_dz(p, t, w, eps); };
    const Real integral = integrate(f, Real(0), t, eps / 2);
    return limit_prefactor(p) * integral;
}

Real p1_range_closed(const Real& t) {
    if (t <= 0) throw std::domain_error("p1_range_closed: t must be positive");
    const double L = window(2, 1e-30);
    const long lmax = static_cast<long>(floor(Real(L / t)).convert_to<double>());
    Real acc(0);
    for (long l = -lmax; l <= lmax; ++l) {
        const Real x = Real(l) * t;
        acc += (1 - 2 * x * x) * exp(-x * x);
    }
    return acc;
}

std::pair<Real, Real> gaussian_ratio_check(unsigned long n, long m) {
    const BigInt num = binomial_safe(2 * n, static_cast<long>(n) + m);
    const BigInt den = binomial_safe(2 * n, static_cast<long>(n));
    const Real exact = to_real(num) / to_real(den);
    const Real approx = exp(-Real(m) * Real(m) / Real(n));
    return {exact, approx};
}

Rational height_exact_scaled_cdf(const MelonConfig& cfg, const Real& t) {
    const long h = static_cast<long>(floor(t * sqrt(Real(cfg.n))).convert_to<double>());
    return height_cdf_value(cfg, h);
}

Rational range_exact_scaled_cdf(const MelonConfig& cfg, const Real& t) {
    const long r = static_cast<long>(floor(t * sqrt(Real(cfg.n))).convert_to<double>()) - 1;
    return range_cdf_value(cfg, r);
}

std::vector<CompareRow> convergence_report(Stat stat, const MelonConfig& cfg,
                                           const std::vector<double>& t_grid,
                                           double eps) {
    std::vector<CompareRow> rows;
    rows.reserve(t_grid.size());
    for (double td : t_grid) {
        const Real t(td);
        CompareRow row;
        row.t = td;
        if (stat == Stat::height) {
            row.exact = height_exact_scaled_cdf(cfg, t);
            row.limit = height_limit_cdf(cfg.p, t);
        } else {
            row.exact = range_exact_scaled_cdf(cfg, t);
            row.limit = range_limit_cdf(cfg.p, t, eps);
        }
        row.abs_err = abs(to_real(row.exact) - row.limit);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace melonlab
