#include "melonlab/melon.hpp"

namespace melonlab {

Rational ExactDistribution::cdf_at(long v) const {
    Rational acc = 0;
    for (size_t i = 0; i < support.size() && support[i] <= v; ++i) acc += mass[i];
    acc.canonicalize();
    return acc;
}

Rational ExactDistribution::moment(unsigned s) const {
    Rational acc = 0;
    for (size_t i = 0; i < support.size(); ++i) {
        BigInt v(support[i]);
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), s);
        acc += Rational(pw) * mass[i];
    }
    acc.canonicalize();
    return acc;
}

BigInt count_total(const MelonConfig& cfg) {
    cfg.validate();
    const long n = static_cast<long>(cfg.n);
    std::vector<std::vector<BigInt>> M(cfg.p, std::vector<BigInt>(cfg.p));
    for (unsigned i = 0; i < cfg.p; ++i)
        for (unsigned j = 0; j < cfg.p; ++j)
            M[i][j] = binomial_safe(2 * cfg.n, n + static_cast<long>(i) - static_cast<long>(j));
    return det_big(std::move(M));
}

BigInt count_total_closed(const MelonConfig& cfg) {
    cfg.validate();
    // C(2n,n)^p * prod_{i<p} i! (2n+i)!/(2n)! (n!/(n+i)!)^2
    BigInt central = binomial_safe(2 * cfg.n, static_cast<long>(cfg.n));
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), central.get_mpz_t(), cfg.p);
    Rational acc(pw);
    for (unsigned i = 0; i < cfg.p; ++i) {
        BigInt ifac;
        mpz_fac_ui(ifac.get_mpz_t(), i);
        // (2n+i)!/(2n)! and ((n+i)!/n!)^2 as rising products
        BigInt rise2n = 1, risen = 1;
        for (unsigned long t = 1; t <= i; ++t) {
            rise2n *= 2 * cfg.n + t;
            risen *= cfg.n + t;
        }
        acc *= Rational(ifac * rise2n, risen * risen);
    }
    acc.canonicalize();
    if (acc.get_den() != 1) throw std::logic_error("count_total_closed: product not integral");
    return acc.get_num();
}

BigInt count_height_lt(const BinomialRow& row, const MelonConfig& cfg, long h) {
    cfg.validate();
    if (h <= cfg.min_height()) return 0;
    const long n = static_cast<long>(cfg.n);
    std::vector<std::vector<BigInt>> M(cfg.p, std::vector<BigInt>(cfg.p));
    for (unsigned i = 0; i < cfg.p; ++i)
        for (unsigned j = 0; j < cfg.p; ++j) {
            const long li = static_cast<long>(i), lj = static_cast<long>(j);
            M[i][j] = row(n + li - lj) - row(n + h - li - lj);
        }
    return det_big(std::move(M));
}

BigInt count_height_lt(const MelonConfig& cfg, long h) {
    if (h <= cfg.min_height()) return 0; // skip building the row
    BinomialRow row(2 * cfg.n);
    return count_height_lt(row, cfg, h);
}

BigInt count_strip(const BinomialRow& row, const MelonConfig& cfg, const StripBound& b) {
    cfg.validate();
    b.validate();
    const long n = static_cast<long>(cfg.n);
    const long two_p = 2L * cfg.p;
    // beyond these the constraint is vacuous; clamping keeps the l-window exact
    const long h = std::min(b.h, n + two_p);
    const long k = std::min(b.k, n + 1);
    if (h <= cfg.min_height()) return 0;
    const long period = h + k;
    const long L = (2 * n + two_p) / period;
    std::vector<std::vector<BigInt>> M(cfg.p, std::vector<BigInt>(cfg.p));
    for (unsigned i = 0; i < cfg.p; ++i)
        for (unsigned j = 0; j < cfg.p; ++j) {
            const long li = static_cast<long>(i), lj = static_cast<long>(j);
            BigInt acc = 0;
            for (long l = -L; l <= L; ++l) {
                acc += row(n + l * period + li - lj);
                acc -= row(n + l * period + h - li - lj);
            }
            M[i][j] = std::move(acc);
        }
    return det_big(std::move(M));
}

BigInt count_strip(const MelonConfig& cfg, const StripBound& b) {
    BinomialRow row(2 * cfg.n);
    return count_strip(row, cfg, b);
}

ExactDistribution height_distribution(const MelonConfig& cfg) {
    cfg.validate();
    if (cfg.n < 1) throw std::domain_error("height_distribution: n must be >= 1");
    BinomialRow row(2 * cfg.n);
    ExactDistribution d;
    d.total_count = count_total(cfg);
    BigInt below = 0; // m_{n, 2p-2} = 0
    for (long h = cfg.min_height(); h <= cfg.max_height(); ++h) {
        BigInt upto = count_height_lt(row, cfg, h + 1);
        BigInt c = upto - below;
        if (c < 0) throw std::logic_error("height_distribution: negative difference");
        d.support.push_back(h);
        d.count.push_back(c);
        Rational m(c, d.total_count);
        m.canonicalize();
        d.mass.push_back(m);
        below = std::move(upto);
    }
    if (below != d.total_count)
        throw std::logic_error("height_distribution: masses do not sum to 1");
    return d;
}

Rational height_moment_exact(const MelonConfig& cfg, unsigned s) {
    cfg.validate();
    if (s < 1) throw std::domain_error("height_moment_exact: s must be >= 1");
    BinomialRow row(2 * cfg.n);
    const BigInt total = count_total(cfg);
    Rational acc = 0;
    BigInt hs_prev = 0; // (h-1)^s
    for (long h = 1; h <= cfg.max_height(); ++h) {
        BigInt hs;
        mpz_ui_pow_ui(hs.get_mpz_t(), static_cast<unsigned long>(h), s);
        const BigInt tail = total - count_height_lt(row, cfg, h);
        acc += Rational((hs - hs_prev) * tail);
        hs_prev = std::move(hs);
    }
    acc /= Rational(total);
    acc.canonicalize();
    return acc;
}

namespace {

// sum_{h=2p-2}^{r} (m_{n,h+1,r-h+1} - m_{n,h,r-h+1}); the h = 2p-2 term's
// subtrahend must vanish
BigInt range_cdf_count(const BinomialRow& row, const MelonConfig& cfg, long r) {
    BigInt acc = 0;
    for (long h = cfg.min_height(); h <= r; ++h) {
        const long k = r - h + 1;
        if (h == cfg.min_height()) {
            if (count_strip(row, cfg, {h, k}) != 0)
                throw std::logic_error("range: m_{n,2p-2,k} != 0");
        }
        acc += count_strip(row, cfg, {h + 1, k});
        acc -= count_strip(row, cfg, {h, k});
    }
    return acc;
}

} // namespace

ExactDistribution range_distribution(const MelonConfig& cfg) {
    cfg.validate();
    if (cfg.n < 1) throw std::domain_error("range_distribution: n must be >= 1");
    BinomialRow row(2 * cfg.n);
    ExactDistribution d;
    d.total_count = count_total(cfg);
    const long rmax = cfg.max_height() + static_cast<long>(cfg.n); // height - min depth
    BigInt below = 0;
    for (long r = cfg.min_height(); r <= rmax; ++r) {
        BigInt upto = range_cdf_count(row, cfg, r);
        BigInt c = upto - below;
        if (c < 0) throw std::logic_error("range_distribution: negative difference");
        if (c != 0 || !d.support.empty()) {
            d.support.push_back(r);
            d.count.push_back(c);
            Rational m(c, d.total_count);
            m.canonicalize();
            d.mass.push_back(m);
        }
        below = std::move(upto);
    }
    while (!d.support.empty() && d.count.back() == 0) {
        d.support.pop_back();
        d.count.pop_back();
        d.mass.pop_back();
    }
    if (below != d.total_count)
        throw std::logic_error("range_distribution: masses do not sum to 1");
    return d;
}

Rational height_cdf_value(const MelonConfig& cfg, long h_plus_one_le) {
    cfg.validate();
    Rational v(count_height_lt(cfg, h_plus_one_le), count_total(cfg));
    v.canonicalize();
    return v;
}

Rational range_cdf_value(const MelonConfig& cfg, long r) {
    cfg.validate();
    if (r < cfg.min_height()) return Rational(0);
    BinomialRow row(2 * cfg.n);
    Rational v(range_cdf_count(row, cfg, r), count_total(cfg));
    v.canonicalize();
    return v;
}

} // namespace melonlab
