#include "melonlab/gauss.hpp"
#include "melonlab/special.hpp"

#include <boost/math/constants/constants.hpp>

namespace melonlab {

GaussExpr GaussExpr::constant(const Rational& c) { return term(c, 0, 0); }

GaussExpr GaussExpr::term(const Rational& c, unsigned a, unsigned b) {
    GaussExpr e;
    e.add_term(c, a, b);
    return e;
}

void GaussExpr::add_term(const Rational& c, unsigned a, unsigned b) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GaussExpr& GaussExpr::operator+=(const GaussExpr& o) {
    for (const auto& [key, c] : o.terms_) add_term(c, key.first, key.second);
    return *this;
}

GaussExpr& GaussExpr::operator-=(const GaussExpr& o) {
    for (const auto& [key, c] : o.terms_) add_term(-c, key.first, key.second);
    return *this;
}

GaussExpr operator*(const GaussExpr& l, const GaussExpr& r) {
    GaussExpr out;
    for (const auto& [kl, cl] : l.terms_)
        for (const auto& [kr, cr] : r.terms_)
            out.add_term(cl * cr, kl.first + kr.first, kl.second + kr.second);
    return out;
}

GaussExpr GaussExpr::scaled(const Rational& c) const {
    GaussExpr out;
    if (c == 0) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

GaussExpr GaussExpr::diff() const {
    // c h^a e^{-b h^2}  ->  c a h^{a-1} e^{-b h^2} - 2 b c h^{a+1} e^{-b h^2}
    GaussExpr out;
    for (const auto& [key, c] : terms_) {
        const auto [a, b] = key;
        if (a > 0) out.add_term(c * static_cast<long>(a), a - 1, b);
        if (b > 0) out.add_term(c * (-2L * static_cast<long>(b)), a + 1, b);
    }
    return out;
}

GaussExpr GaussExpr::times_h_pow(unsigned s) const {
    GaussExpr out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(std::make_pair(key.first + s, key.second), c);
    return out;
}

Real GaussExpr::eval(const Real& h) const {
    const Real h2 = h * h;
    Real acc = 0;
    for (const auto& [key, c] : terms_) {
        const auto [a, b] = key;
        Real t = to_real(c);
        if (a > 0) t *= pow(h, static_cast<int>(a));
        if (b > 0) t *= exp(-static_cast<int>(b) * h2);
        acc += t;
    }
    return acc;
}

std::vector<GaussTerm> GaussExpr::terms() const {
    std::vector<GaussTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
    return out;
}

Rational GaussExpr::coeff(unsigned a, unsigned b) const {
    auto it = terms_.find(std::make_pair(a, b));
    return it == terms_.end() ? Rational(0) : it->second;
}

bool GaussExpr::has_pure_polynomial_part() const {
    for (const auto& [key, c] : terms_)
        if (key.second == 0) return true;
    return false;
}

GaussExpr det_gexpr(const std::vector<std::vector<GaussExpr>>& M) {
    const size_t n = M.size();
    if (n == 0) throw std::invalid_argument("det_gexpr: empty matrix");
    if (n > 8) throw capacity_error("det_gexpr: size > 8 (cofactor expansion cap)");
    for (const auto& row : M)
        if (row.size() != n) throw std::invalid_argument("det_gexpr: matrix not square");
    if (n == 1) return M[0][0];

    GaussExpr acc;
    std::vector<std::vector<GaussExpr>> minor(n - 1, std::vector<GaussExpr>(n - 1));
    for (size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = M[r][c];
            }
        }
        GaussExpr contrib = M[0][j] * det_gexpr(minor);
        if (j % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
    }
    return acc;
}

namespace {

Rational prefactor_cp(unsigned p) {
    // 2^{-C(p,2)} / prod_{j<p} j!
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p) * (p - 1) / 2);
    for (unsigned j = 0; j < p; ++j) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), j);
        den *= f;
    }
    Rational c(1, den);
    c.canonicalize();
    return c;
}

// H_k(h) e^{-h^2} as a GaussExpr
GaussExpr hermite_gauss(unsigned k) {
    GaussExpr e;
    HermitePoly H = hermite(k);
    for (unsigned i = 0; i <= H.degree; ++i)
        if (H.coeff[i] != 0) e.add_term(Rational(H.coeff[i]), i, 1);
    return e;
}

void check_symbolic_p(unsigned p) {
    if (p < 1) throw std::domain_error("p must be >= 1");
    if (p > 6) throw capacity_error("symbolic determinants are capped at p <= 6");
}

} // namespace

GaussExpr kappa(unsigned p) {
    check_symbolic_p(p);
    std::vector<std::vector<GaussExpr>> M(p, std::vector<GaussExpr>(p));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            GaussExpr e = GaussExpr::constant(Rational(hermite_zero(i + j)) * (i % 2 ? -1 : 1));
            e -= hermite_gauss(i + j);
            M[i][j] = e;
        }
    GaussExpr k = GaussExpr::constant(1) - det_gexpr(M).scaled(prefactor_cp(p));
    // the theorem-level guarantees, cheap to enforce here
    for (const auto& t : k.terms()) {
        if (t.b == 0) throw std::logic_error("kappa: constant part failed to cancel");
        if (t.a % 2 != 0) throw std::logic_error("kappa: odd power survived");
    }
    return k;
}

GaussExpr tau(unsigned p) {
    check_symbolic_p(p);
    std::vector<std::vector<GaussExpr>> M(p, std::vector<GaussExpr>(p));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            // rows 0..p-2 as in kappa; last row uses degree p+j with sign (-1)^p
            const unsigned deg = (i + 1 < p) ? i + j : p + j;
            const int sgn = (i + 1 < p) ? (i % 2 ? -1 : 1) : (p % 2 ? -1 : 1);
            GaussExpr e = GaussExpr::constant(Rational(hermite_zero(deg)) * sgn);
            e -= hermite_gauss(deg);
            M[i][j] = e;
        }
    return det_gexpr(M).scaled(Rational(static_cast<long>(p) - 1) * prefactor_cp(p));
}

GaussExpr chi_determinant(unsigned p) {
    check_symbolic_p(p);
    std::vector<std::vector<GaussExpr>> M(p, std::vector<GaussExpr>(p));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            const Rational h0(hermite_zero(i + j));
            GaussExpr e = GaussExpr::constant(h0 * (i % 2 ? -1 : 1));
            e -= GaussExpr::term(h0, 0, 1);
            M[i][j] = e;
        }
    return det_gexpr(M).scaled(prefactor_cp(p));
}

GaussExpr chi_product_form(unsigned p) {
    GaussExpr one_m2 = GaussExpr::constant(1) - GaussExpr::term(1, 0, 2);
    GaussExpr one_m1 = GaussExpr::constant(1) - GaussExpr::term(1, 0, 1);
    GaussExpr out = GaussExpr::constant(1);
    for (unsigned i = 0; i < p / 2; ++i) out = out * one_m2;
    if (p % 2) out = out * one_m1;
    return out;
}

BigInt hankel_det(unsigned p) {
    std::vector<std::vector<BigInt>> M(p, std::vector<BigInt>(p));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            if ((i + j) % 2 != 0) {
                M[i][j] = 0; // H_odd(0) = 0
            } else {
                BigInt v = hermite_zero(i + j);
                if (((i + j) / 2) % 2 != 0) v = -v;
                M[i][j] = v;
            }
        }
    return det_big(std::move(M));
}

BigInt hankel_closed(unsigned p) {
    BigInt out = 1;
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(p) * (p - 1) / 2);
    for (unsigned j = 0; j < p; ++j) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), j);
        out *= f;
    }
    return out;
}

Real Xi1Value::to_real() const {
    Real acc = melonlab::to_real(q0);
    if (!rad.empty()) {
        const Real sp = sqrt(boost::math::constants::pi<Real>());
        for (const auto& [s, c] : rad) acc += sp * sqrt(Real(s)) * melonlab::to_real(c);
    }
    return acc;
}

namespace {

// split b = s * m^2 with s squarefree
void squarefree_split(unsigned long b, unsigned long& s, unsigned long& m) {
    s = 1;
    m = 1;
    for (unsigned long d = 2; d * d <= b; ++d) {
        unsigned e = 0;
        while (b % d == 0) {
            b /= d;
            ++e;
        }
        if (e % 2) s *= d;
        for (unsigned i = 0; i < e / 2; ++i) m *= d;
    }
    if (b > 1) s *= b;
}

} // namespace

Xi1Value xi1_exact(const GaussExpr& e) {
    Xi1Value out;
    for (const auto& t : e.terms()) {
        if (t.b == 0)
            throw std::domain_error("xi1: term with b = 0 (operator defined on decaying terms only)");
        const GammaHalf g = gamma_half(static_cast<long>(t.a) + 1); // Gamma((a+1)/2)
        if (!g.has_sqrt_pi) {
            // odd a: rational * b^{-(a+1)/2}
            BigInt bp;
            mpz_ui_pow_ui(bp.get_mpz_t(), t.b, (t.a + 1) / 2);
            Rational v = t.c * g.rat / 2 / Rational(bp);
            v.canonicalize();
            out.q0 += v;
        } else {
            // even a: rational * sqrt(pi) * b^{-(a+1)/2}; b^{-1/2} = sqrt(s)/(m s)
            unsigned long s, m;
            squarefree_split(t.b, s, m);
            BigInt bp;
            mpz_ui_pow_ui(bp.get_mpz_t(), t.b, t.a / 2);
            Rational v = t.c * g.rat / 2 / Rational(bp) / Rational(BigInt(m) * BigInt(s));
            v.canonicalize();
            auto it = out.rad.find(s);
            if (it == out.rad.end()) {
                out.rad.emplace(s, v);
            } else {
                it->second += v;
                if (it->second == 0) out.rad.erase(it);
            }
        }
    }
    out.q0.canonicalize();
    return out;
}

Real xi1(const GaussExpr& e) { return xi1_exact(e).to_real(); }

Rational xi0(const GaussExpr& e) {
    Rational acc = 0;
    for (const auto& t : e.terms()) {
        if (t.b == 0)
            throw std::domain_error("xi0: term with b = 0 (operator defined on decaying terms only)");
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), t.a + 1);
        Rational v = t.c * bernoulli(t.a + 1) / Rational(fact);
        acc += (t.a % 2 == 0) ? v : -v;
    }
    acc.canonicalize();
    return acc;
}

Real f_sum_numeric(unsigned nu, const Rational& mu, unsigned long n) {
    if (mu <= 0) throw std::domain_error("f_sum_numeric: mu must be positive");
    const Real mu_over_n = to_real(mu) / Real(n);
    Real acc = 0;
    const Real rel_floor("1e-30");
    // terms rise until h ~ sqrt(nu*n/(2mu)), then decay; don't stop before the peak
    const unsigned long peak =
        static_cast<unsigned long>(sqrt(Real(n) * (nu + 1) / to_real(mu))) + 2;
    for (unsigned long h = 1;; ++h) {
        Real t = exp(-mu_over_n * h * h);
        if (nu > 0) t *= pow(Real(h), static_cast<int>(nu));
        acc += t;
        if (h > peak && t < acc * rel_floor) break;
    }
    return acc;
}

Real f_sum_asymptotic(unsigned nu, const Rational& mu, unsigned long n, unsigned M) {
    if (mu <= 0) throw std::domain_error("f_sum_asymptotic: mu must be positive");
    const Real n_over_mu = Real(n) / to_real(mu);
    // leading 1/2 Gamma((nu+1)/2) (n/mu)^{(nu+1)/2}
    Real acc = gamma_half(static_cast<long>(nu) + 1).to_real() / 2;
    acc *= pow(sqrt(n_over_mu), static_cast<int>(nu) + 1);
    // Bernoulli tail, residue form
    const Real mu_over_n = 1 / n_over_mu;
    for (unsigned m = 0; m <= M; ++m) {
        const Rational B = bernoulli(2 * m + nu + 1);
        if (B == 0) continue;
        BigInt mfact;
        mpz_fac_ui(mfact.get_mpz_t(), m);
        Rational coef = B / Rational(BigInt(2 * m + nu + 1) * mfact);
        coef.canonicalize();
        Real term = to_real(coef) * pow(mu_over_n, static_cast<int>(m));
        acc += ((nu + m) % 2 == 0) ? term : -term;
    }
    return acc;
}

Real moment_asymptotic(unsigned p, unsigned s, unsigned long n) {
    if (s < 1) throw std::domain_error("moment_asymptotic: s must be >= 1");
    const GaussExpr kp = kappa(p);
    if (s == 1)
        return xi1(kp) * sqrt(Real(n)) + Real(p) - Real(3) / 2;
    Real lead = Real(s) * xi1(kp.times_h_pow(s - 1)) * pow(sqrt(Real(n)), static_cast<int>(s));
    Real sub = (Real(s) - 1) * (Real(p) - 1 - Real(s) / 2) * xi1(kp.times_h_pow(s - 2)) *
               pow(sqrt(Real(n)), static_cast<int>(s) - 1);
    return lead + sub;
}

Real moment_asymptotic_corrected(unsigned p, unsigned s, unsigned long n) {
    if (s < 1) throw std::domain_error("moment_asymptotic: s must be >= 1");
    const GaussExpr kp = kappa(p);
    if (s == 1)
        return xi1(kp) * sqrt(Real(n)) + Real(p) - Real(3) / 2;
    Real lead = Real(s) * xi1(kp.times_h_pow(s - 1)) * pow(sqrt(Real(n)), static_cast<int>(s));
    Real sub = Real(s) * (Real(s) - 1) * (Real(p) - Real(3) / 2) * xi1(kp.times_h_pow(s - 2)) *
               pow(sqrt(Real(n)), static_cast<int>(s) - 1);
    return lead + sub;
}

Xi1Value table1_coefficient(unsigned p, unsigned s) {
    if (s < 1) throw std::domain_error("table1_coefficient: s must be >= 1");
    Xi1Value v = xi1_exact(kappa(p).times_h_pow(s - 1));
    v.q0 *= static_cast<long>(s);
    for (auto& [key, c] : v.rad) c *= static_cast<long>(s);
    return v;
}

nlohmann::json gexpr_to_json(const GaussExpr& e) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : e.terms()) {
        arr.push_back({{"c_num", t.c.get_num().get_str()},
                       {"c_den", t.c.get_den().get_str()},
                       {"a", t.a},
                       {"b", t.b}});
    }
    return arr;
}

} // namespace melonlab
