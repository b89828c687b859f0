#pragma once
// Exact counting of p-watermelons (p non-intersecting (1,+-1)-paths, path i
// from (0,2i) to (2n,2i)) under height/depth constraints, and the exact
// finite-n laws of height and range.
//
// Conventions: height = max ordinate of the top path (>= 2p-2),
// depth = min ordinate of the bottom path (<= 0), range = height - depth.
// "Strip" counts restrict to height < h and depth > -k.

#include "melonlab/bigint.hpp"

#include <vector>

namespace melonlab {

struct MelonConfig {
    unsigned p = 1;      // number of paths
    unsigned long n = 0; // each path has length 2n

    void validate() const {
        if (p < 1) throw std::domain_error("MelonConfig: p must be >= 1");
    }
    long min_height() const { return 2L * p - 2; }
    long max_height() const { return static_cast<long>(n) + 2L * p - 2; }
};

struct StripBound {
    long h = 0; // counts require height < h
    long k = 1; // counts require depth > -k; k = n+1 means no depth restriction

    void validate() const {
        if (h < 0) throw std::domain_error("StripBound: h must be >= 0");
        if (k < 1) throw std::domain_error("StripBound: k must be >= 1");
    }
};

struct ExactDistribution {
    std::vector<long> support;    // ascending
    std::vector<BigInt> count;    // count[i] watermelons at support[i]
    std::vector<Rational> mass;   // count[i] / total_count
    BigInt total_count;

    Rational cdf_at(long v) const; // P{X <= v}
    Rational moment(unsigned s) const;
};

// m_n^{(p)} = det C(2n, n+i-j).
BigInt count_total(const MelonConfig& cfg);

// Closed form C(2n,n)^p prod_i i! (2n+i)!/(2n)! (n!/(n+i)!)^2; equals
// count_total exactly.
BigInt count_total_closed(const MelonConfig& cfg);

// m_{n,h}^{(p)} = det(C(2n,n+i-j) - C(2n,n+h-i-j)): watermelons of height < h.
// 0 for h <= 2p-2; saturates at m_n for h > n+2p-2.
BigInt count_height_lt(const MelonConfig& cfg, long h);

// m_{n,h,k}^{(p)}: height < h and depth > -k, by the iterated-reflection sum
//   det_{i,j} sum_{l in Z} [C(2n, n+l(h+k)+i-j) - C(2n, n+l(h+k)+h-i-j)].
// The l-sum is truncated at |l|(h+k) <= 2n+2p, where every entry vanishes.
// Bounds are clamped first (h -> min(h, n+2p), k -> min(k, n+1)): beyond the
// clamp the constraint is vacuous, and clamping keeps the truncation window
// lossless for oversized h, k.
BigInt count_strip(const MelonConfig& cfg, const StripBound& b);

// Exact height PMF on [2p-2, n+2p-2] from differences m_{n,h+1} - m_{n,h}.
ExactDistribution height_distribution(const MelonConfig& cfg);

// E(H^s) = sum_{h>=1} (h^s - (h-1)^s) (m_n - m_{n,h}) / m_n, exact.
Rational height_moment_exact(const MelonConfig& cfg, unsigned s);

// Exact range law via the strip counts:
//   P{R <= r} = sum_{h=2p-2}^{r} (m_{n,h+1,r-h+1} - m_{n,h,r-h+1}) / m_n.
// The h = 2p-2 edge term m_{n,2p-2,k} = 0 is asserted, not assumed.
ExactDistribution range_distribution(const MelonConfig& cfg);

// Single CDF values without building the whole table (used by the
// exact-vs-limit comparisons; the scaling conventions live in limits.hpp).
Rational height_cdf_value(const MelonConfig& cfg, long h_plus_one_le);
Rational range_cdf_value(const MelonConfig& cfg, long r);

// Same counts computed against a shared binomial row C(2n, .); the row must
// have N = 2n. Sweeps reuse one row instead of recomputing binomials.
BigInt count_height_lt(const BinomialRow& row, const MelonConfig& cfg, long h);
BigInt count_strip(const BinomialRow& row, const MelonConfig& cfg, const StripBound& b);

} // namespace melonlab
