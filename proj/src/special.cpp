#include "melonlab/special.hpp"

#include <boost/math/constants/constants.hpp>

namespace melonlab {

Real HermitePoly::eval(const Real& x) const {
    Real acc = 0;
    for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + to_real(coeff[i]);
    return acc;
}

Rational HermitePoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + Rational(coeff[i]);
    return acc;
}

HermitePoly hermite(unsigned k) {
    std::vector<BigInt> prev{1};          // H_0
    if (k == 0) return {0, prev};
    std::vector<BigInt> cur{0, 2};        // H_1
    for (unsigned d = 1; d < k; ++d) {
        std::vector<BigInt> next(d + 2, BigInt(0));
        for (unsigned i = 0; i <= d; ++i) next[i + 1] += 2 * cur[i];
        for (unsigned i = 0; i + 1 <= d; ++i) next[i] -= 2 * static_cast<long>(d) * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {k, cur};
}

HermitePoly hermite_explicit_sum(unsigned k) {
    // H_k(z)/k! = sum_{m >= 0} (-1)^{k-m}/(k-m)! * (2z)^{2m-k}/(2m-k)!
    std::vector<BigInt> c(k + 1, BigInt(0));
    BigInt kfact;
    mpz_fac_ui(kfact.get_mpz_t(), k);
    for (unsigned m = (k + 1) / 2; m <= k; ++m) {
        const unsigned pw = 2 * m - k; // power of z
        BigInt num = kfact;
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), pw); // * 2^pw
        BigInt den, f1, f2;
        mpz_fac_ui(f1.get_mpz_t(), k - m);
        mpz_fac_ui(f2.get_mpz_t(), pw);
        den = f1 * f2;
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        c[pw] = ((k - m) % 2 == 0) ? num : -num;
    }
    return {k, c};
}

BigInt hermite_zero(unsigned k) {
    if (k % 2 == 1) return 0;
    BigInt num, den;
    mpz_fac_ui(num.get_mpz_t(), k);
    mpz_fac_ui(den.get_mpz_t(), k / 2);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return (k / 2) % 2 == 0 ? num : -num;
}

Real GammaHalf::to_real() const {
    Real v = melonlab::to_real(rat);
    if (has_sqrt_pi) v *= sqrt(boost::math::constants::pi<Real>());
    return v;
}

GammaHalf gamma_half(long num) {
    if (num <= 0) throw std::domain_error("gamma_half: argument must be positive");
    GammaHalf g;
    if (num % 2 == 0) {
        // Gamma(m) = (m-1)!
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(num / 2 - 1));
        g.rat = Rational(f);
        g.has_sqrt_pi = false;
    } else {
        // Gamma(1/2 + j) = sqrt(pi) * (2j-1)!! / 2^j, with num = 2j+1
        const long j = (num - 1) / 2;
        BigInt dfac = 1;
        for (long t = 1; t < 2 * j; t += 2) dfac *= t;
        BigInt den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(j));
        g.rat = Rational(dfac, den);
        g.rat.canonicalize();
        g.has_sqrt_pi = true;
    }
    return g;
}

Rational bernoulli(unsigned m) {
    // recurrence derived from the defining series: sum_{j<k+1} C(k+1,j) B_j = 0 for k >= 1
    std::vector<Rational> B(m + 1);
    B[0] = 1;
    for (unsigned k = 1; k <= m; ++k) {
        Rational acc = 0;
        for (unsigned j = 0; j < k; ++j)
            acc += Rational(binomial_safe(k + 1, static_cast<long>(j))) * B[j];
        B[k] = -acc / Rational(static_cast<long>(k) + 1);
        B[k].canonicalize();
    }
    return B[m];
}

} // namespace melonlab
