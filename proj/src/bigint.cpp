#include "melonlab/bigint.hpp"

namespace melonlab {

BigInt binomial_safe(unsigned long N, long K) {
    if (K < 0 || K > static_cast<long>(N)) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), N, static_cast<unsigned long>(K));
    return r;
}

BinomialRow::BinomialRow(unsigned long N) : N_(N), row_(N + 1), zero_(0) {
    row_[0] = 1;
    for (unsigned long k = 1; k <= N; ++k) {
        // C(N,k) = C(N,k-1) * (N-k+1) / k, exact at every step
        row_[k] = row_[k - 1] * static_cast<unsigned long>(N - k + 1);
        mpz_divexact_ui(row_[k].get_mpz_t(), row_[k].get_mpz_t(), k);
    }
}

BigInt det_big(std::vector<std::vector<BigInt>> M) {
    const size_t n = M.size();
    if (n == 0) throw std::invalid_argument("det_big: empty matrix");
    for (const auto& row : M)
        if (row.size() != n) throw std::invalid_argument("det_big: matrix not square");

    int sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && M[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                M[i][j] = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

} // namespace melonlab
