#pragma once
// Exact big-integer plumbing: safe binomials, cached binomial rows and
// fraction-free determinants. Everything here is exact (GMP).

#include <gmpxx.h>
#include <stdexcept>
#include <vector>

namespace melonlab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when a size guard refuses an input (CLI maps this to exit code 3).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// C(N,K) with the out-of-range convention: 0 unless 0 <= K <= N.
// The reflection sums below rely on this convention.
BigInt binomial_safe(unsigned long N, long K);

// One row of Pascal's triangle, C(N, 0..N), built once and shared across a
// sweep. Out-of-range lookups return 0, same as binomial_safe.
class BinomialRow {
  public:
    explicit BinomialRow(unsigned long N);
    unsigned long N() const { return N_; }
    const BigInt& operator()(long K) const {
        if (K < 0 || K > static_cast<long>(N_)) return zero_;
        return row_[static_cast<size_t>(K)];
    }

  private:
    unsigned long N_;
    std::vector<BigInt> row_;
    BigInt zero_;
};

// Exact determinant by fraction-free (Bareiss) elimination; all intermediates
// stay integral. The matrix is consumed. Throws std::invalid_argument if the
// matrix is empty or not square.
BigInt det_big(std::vector<std::vector<BigInt>> M);

} // namespace melonlab
