#pragma once
// Exact special-function kernels: physicists' Hermite polynomials, Gamma at
// half-integer arguments, Bernoulli numbers.
//
// Hermite normalization is the physicists' one (H_0 = 1, H_1 = 2x,
// H_{k+1} = 2x H_k - 2k H_{k-1}). The probabilists' He_k would silently
// corrupt every determinant downstream, so the tests pin the recurrence
// against the explicit sum H_k(z) = k! * sum_m (-1)^{k-m}/(k-m)! *
// (2z)^{2m-k}/(2m-k)!.

#include "melonlab/bigint.hpp"
#include "melonlab/real.hpp"

#include <vector>

namespace melonlab {

struct HermitePoly {
    unsigned degree = 0;
    std::vector<BigInt> coeff; // coeff[i] multiplies x^i; size degree+1

    Real eval(const Real& x) const;
    Rational eval(const Rational& x) const;
};

// H_k by the three-term recurrence.
HermitePoly hermite(unsigned k);

// H_k by the explicit sum; used as the test oracle for hermite().
HermitePoly hermite_explicit_sum(unsigned k);

// H_k(0): (-1)^{k/2} k!/(k/2)! for even k, 0 for odd k.
BigInt hermite_zero(unsigned k);

// Gamma(num/2) for num >= 1, represented exactly as rat * sqrt(pi)^{0 or 1}.
struct GammaHalf {
    Rational rat;
    bool has_sqrt_pi = false;

    Real to_real() const;
};
GammaHalf gamma_half(long num);

// B_m from the defining series sum B_j t^j / j! = t/(e^t - 1); B_1 = -1/2.
Rational bernoulli(unsigned m);

} // namespace melonlab
