#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace frobenize;

TEST(Hypergeometric, CoefficientsMatchOperatorRecurrence) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 12; ++t) {
        const std::size_t n = 1 + t % 3;
        auto [alpha, beta] = oracle::random_hypergeometric(rng, n);
        HypSeriesSpec spec{alpha, std::vector<Rat>(beta.begin(), beta.end() - 1)};
        const auto op = hypergeometric_operator(alpha, beta).ddz();
        EXPECT_EQ(hyper_coeffs(spec, 40), series_from_operator(op, 40));
    }
}

TEST(Hypergeometric, ClosedForms) {
    // 1F0(1/2) = (1 - z)^{-1/2}: binom(2k,k)/4^k
    const auto c = hyper_coeffs({{Rat(1, 2)}, {}}, 30);
    for (std::size_t k = 0; k < 30; ++k) {
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * k, k);
        Rat expect(b, pow_big(4, k));
        expect.canonicalize();
        EXPECT_EQ(c[k], expect);
    }
    EXPECT_THROW(hyper_coeffs({{Rat(1, 2)}, {Rat(-1)}}, 5), InputError);
    EXPECT_THROW(hyper_coeffs({{Rat(1, 2)}, {Rat(1, 3)}}, 5), InputError);
    EXPECT_EQ(hyper_coeffs({{Rat(1, 2)}, {}}, 0).size(), 0u);
}

TEST(Integrality, FirstOffendingIndex) {
    const auto c = hyper_coeffs({{Rat(1, 2), Rat(1, 2)}, {Rat(2, 3)}}, 2000);
    EXPECT_TRUE(integrality_check(c, 7).integral);
    EXPECT_TRUE(integrality_check(c, 3).integral);  // 1/(2/3)_k carries 3^k
    const auto v = integrality_check(c, 2);
    EXPECT_FALSE(v.integral);
    EXPECT_EQ(*v.first_offending, 1u);
    const auto d = hyper_coeffs({{Rat(1, 3), Rat(1)}, {Rat(1, 2)}}, 10);
    EXPECT_EQ(*integrality_check(d, 3).first_offending, 1u);
    EXPECT_THROW(reduce_mod_p(d, 3, 5), EligibilityError);
}

TEST(OperatorSeries, Eligibility) {
    EXPECT_THROW(series_from_operator(parse_operator("T - 1/2"), 5), EligibilityError);
    EXPECT_EQ(series_from_operator(parse_operator("T^2 - 2*T"), 4), (std::vector<Rat>{1, 0, 0, 0}));
    try {
        series_from_operator(parse_operator("T^2 - T - z"), 5);
        FAIL();
    } catch (const EligibilityError& e) {
        EXPECT_EQ(e.tag(), "RESONANCE");
    }
    // Ordinary point: y'' = -y with y(0) = 1, y'(0) = 0 is cos z.
    const auto c = series_from_operator(parse_operator("D^2 + 1"), 8);
    EXPECT_EQ(c, (std::vector<Rat>{1, 0, Rat(-1, 2), 0, Rat(1, 24), 0, Rat(-1, 720), 0}));
    // y' = y/(2(1 - z))
    const auto s = series_from_operator(order_one_operator(parse_rational_function("-1/(2*(z-1))")), 20);
    EXPECT_EQ(s, hyper_coeffs({{Rat(1, 2)}, {}}, 20));
}

TEST(ModP, TwistEqualsPower) {
    std::mt19937_64 rng(6);
    for (Prime p : {2u, 3u, 5u, 7u}) {
        std::vector<Residue> c(200);
        for (auto& x : c) x = static_cast<Residue>(rng() % p);
        const SeriesFp f(p, c);
        for (unsigned e = 0; e <= 2; ++e) {
            std::uint64_t pe = 1;
            for (unsigned i = 0; i < e; ++i) pe *= p;
            EXPECT_EQ(frobenius_twist(f, e), oracle::power(f, pe));
        }
    }
}

TEST(ModP, ReductionMatchesBinomials) {
    for (Prime p : {3u, 5u, 7u, 11u}) {
        const auto c = hyper_coeffs({{Rat(1, 2), Rat(1, 2)}, {Rat(1)}}, 300);
        EXPECT_EQ(reduce_mod_p(c, p, 300), oracle::central_binomial_series(p, 300, 2));
    }
}

TEST(ModP, ExactSeriesCaches) {
    int calls = 0;
    ExactSeries s([&](std::size_t N) {
        ++calls;
        return hyper_coeffs({{Rat(1, 2)}, {}}, N);
    });
    s.coeffs(50);
    s.coeffs(20);
    EXPECT_EQ(calls, 1);
    EXPECT_EQ(s.reduced(5, 10).size(), 10u);
    EXPECT_EQ(s.source(5)(30).size(), 30u);
    EXPECT_EQ(calls, 1);
}
