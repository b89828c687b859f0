#include "melonlab/melon.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace melonlab;

TEST_SUITE("counts") {

TEST_CASE("det_big basics") {
    CHECK(det_big({{BigInt(1), BigInt(0), BigInt(0)},
                   {BigInt(0), BigInt(1), BigInt(0)},
                   {BigInt(0), BigInt(0), BigInt(1)}}) == 1);
    CHECK(det_big({{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(2)}}) == 3);
    CHECK(det_big({{BigInt(6), BigInt(4)}, {BigInt(4), BigInt(6)}}) == 20);
    CHECK_THROWS_AS(det_big({}), std::invalid_argument);
    CHECK_THROWS_AS(det_big({{BigInt(1), BigInt(2)}}), std::invalid_argument);
}

TEST_CASE("binomial conventions") {
    CHECK(binomial_safe(4, 2) == 6);
    CHECK(binomial_safe(4, -1) == 0);
    CHECK(binomial_safe(4, 5) == 0);
    const BinomialRow row(6);
    CHECK(row(3) == 20);
    CHECK(row(-2) == 0);
    CHECK(row(7) == 0);
    for (long k = 0; k <= 6; ++k) CHECK(row(k) == binomial_safe(6, k));
}

TEST_CASE("total counts") {
    CHECK(count_total({1, 3}) == 20);
    CHECK(count_total({2, 1}) == 3);
    CHECK(count_total({2, 2}) == 20);
    CHECK(count_total_closed({2, 2}) == 20);
    for (unsigned p = 1; p <= 6; ++p)
        for (unsigned long n = 0; n <= 20; ++n)
            CHECK(count_total({p, n}) == count_total_closed({p, n}));
    CHECK(count_total({6, 100}) == count_total_closed({6, 100}));
}

TEST_CASE("height-restricted counts") {
    CHECK(count_height_lt({1, 2}, 2) == 5);
    CHECK(count_height_lt({1, 2}, 1) == 2);
    CHECK(count_height_lt({2, 2}, 2) == 0);

    for (const MelonConfig cfg : {MelonConfig{2, 5}, MelonConfig{3, 4}}) {
        BigInt prev(0);
        for (long h = 0; h <= cfg.max_height() + 2; ++h) {
            const BigInt cur = count_height_lt(cfg, h);
            CHECK(cur >= prev); // nondecreasing in h
            if (h <= cfg.min_height()) CHECK(cur == 0);
            prev = cur;
        }
        CHECK(count_height_lt(cfg, cfg.max_height() + 1) == count_total(cfg));
        CHECK(count_height_lt(cfg, cfg.max_height() + 10) == count_total(cfg));
    }
}

TEST_CASE("strip counts") {
    CHECK(count_strip({1, 2}, {1, 2}) == 1);
    CHECK(count_strip({1, 2}, {2, 1}) == 1);
    CHECK(count_strip({1, 2}, {3, 3}) == 6);
    // the lower edge of the range sum vanishes identically
    for (unsigned p = 1; p <= 3; ++p)
        for (long k = 1; k <= 5; ++k)
            CHECK(count_strip({p, 4}, {2L * p - 2, k}) == 0);
}

TEST_CASE("strip reduces to height count when depth is unconstrained") {
    for (unsigned p = 1; p <= 4; ++p)
        for (unsigned long n = 1; n <= 8; ++n)
            for (long h = 0; h <= static_cast<long>(n) + 2 * p; ++h) {
                const MelonConfig cfg{p, n};
                CHECK(count_strip(cfg, {h, static_cast<long>(n) + 1}) ==
                      count_height_lt(cfg, h));
            }
}

TEST_CASE("strip reflection symmetry (vertical flip)") {
    for (unsigned p = 1; p <= 4; ++p)
        for (unsigned long n : {5ul, 12ul, 20ul}) {
            const MelonConfig cfg{p, n};
            const long off = 2L * p - 2;
            for (long h = off + 1; h <= static_cast<long>(n) + 2 * p; ++h)
                for (long k = 1; k <= static_cast<long>(n) + 1; ++k)
                    CHECK(count_strip(cfg, {h, k}) ==
                          count_strip(cfg, {k + off, h - off}));
        }
}

TEST_CASE("asymptotic growth of the total count") {
    // count_total * n^{p(p-1)/2} / (2^{p(p-1)/2} C(2n,n)^p prod i!) -> 1
    for (unsigned p = 1; p <= 4; ++p)
        for (unsigned long n : {100ul, 1000ul, 10000ul}) {
            const unsigned e = p * (p - 1) / 2;
            Rational denom(BigInt(1) << e);
            BigInt c2n;
            mpz_bin_uiui(c2n.get_mpz_t(), 2 * n, n);
            for (unsigned i = 0; i < p; ++i) {
                BigInt f;
                mpz_fac_ui(f.get_mpz_t(), i);
                denom *= f;
                denom *= c2n;
            }
            Rational ratio(count_total({p, n}));
            for (unsigned i = 0; i < e; ++i) ratio *= n;
            ratio /= denom;
            const Rational err = ratio - 1;
            // relative error decays like p(p^2-1)/(4n); allow slack of 1/n
            CHECK(abs(err) <= Rational(p * (p * p - 1) + 4) / 4 / BigInt(n));
        }
}

TEST_CASE("height distribution") {
    const ExactDistribution d = height_distribution({1, 2});
    REQUIRE(d.support == std::vector<long>{0, 1, 2});
    CHECK(d.count[0] == 2);
    CHECK(d.count[1] == 3);
    CHECK(d.count[2] == 1);
    CHECK(d.mass[0] == Rational(1, 3));
    CHECK(d.mass[1] == Rational(1, 2));
    CHECK(d.mass[2] == Rational(1, 6));
    CHECK(d.total_count == 6);
    CHECK(d.cdf_at(1) == Rational(5, 6));
    CHECK(d.cdf_at(-1) == 0);
    CHECK(d.cdf_at(10) == 1);

    const ExactDistribution d11 = height_distribution({1, 1});
    CHECK(d11.mass == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    for (unsigned p = 1; p <= 3; ++p)
        for (unsigned long n = 1; n <= 6; ++n) {
            Rational sum;
            for (const auto& m : height_distribution({p, n}).mass) sum += m;
            CHECK(sum == 1);
        }
}

TEST_CASE("height moments") {
    CHECK(height_moment_exact({1, 2}, 1) == Rational(5, 6));
    CHECK(height_moment_exact({1, 1}, 1) == Rational(1, 2));
    CHECK(height_moment_exact({1, 2}, 2) == Rational(7, 6));
    // moment from the distribution agrees
    const ExactDistribution d = height_distribution({2, 3});
    CHECK(d.moment(1) == height_moment_exact({2, 3}, 1));
    CHECK(d.moment(2) == height_moment_exact({2, 3}, 2));
}

TEST_CASE("range distribution") {
    const ExactDistribution d = range_distribution({1, 2});
    REQUIRE(d.support == std::vector<long>{1, 2});
    CHECK(d.mass[0] == Rational(1, 3)); // P{R <= 1} = 2/6
    CHECK(d.mass[1] == Rational(2, 3));
    CHECK(d.cdf_at(2) == 1);

    const ExactDistribution d11 = range_distribution({1, 1});
    REQUIRE(d11.support == std::vector<long>{1});
    CHECK(d11.mass[0] == 1);

    CHECK(range_cdf_value({1, 2}, 1) == Rational(1, 3));
    CHECK(height_cdf_value({1, 2}, 2) == Rational(5, 6)); // m_{2,2}/m_2
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS((MelonConfig{0, 3}.validate()), std::domain_error);
    CHECK_THROWS_AS((StripBound{-1, 1}).validate(), std::domain_error);
    CHECK_THROWS_AS((StripBound{2, 0}).validate(), std::domain_error);
}

} // TEST_SUITE
