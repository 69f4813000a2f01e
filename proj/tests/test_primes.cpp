#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace frobenize;

namespace {

const std::vector<Rat> kAlpha = {Rat(1, 2), Rat(1, 2)};
const std::vector<Rat> kBeta = {Rat(2, 3), Rat(1)};

std::vector<Prime> primes_above(Prime lo, std::int64_t bound) {
    std::vector<Prime> out;
    for (auto p : primes_up_to(bound))
        if (p > lo) out.push_back(p);
    return out;
}

}  // namespace

TEST(AmbientSet, Hypergeometric) {
    const auto op = hypergeometric_operator(kAlpha, kBeta).ddz();
    const auto s = build_ambient_set(op);
    // points 0, 1; shift m = 1; difference +-1; exponent denominators 3 and 2
    EXPECT_EQ(s.m_shift, 1u);
    EXPECT_EQ(s.elements, (std::vector<Rat>{Rat(-1), Rat(1), Rat(2), Rat(3)}));
}

TEST(AmbientSet, ShiftSkipsSingularNegatives) {
    const auto op = parse_operator("z*(z+1)*(z+2)*D + 1/2");
    const auto s = build_ambient_set(op);
    EXPECT_EQ(s.m_shift, 3u);
}

TEST(PrimeSet, HypergeometricExample) {
    const auto general = prime_set(hypergeometric_operator(kAlpha, kBeta).ddz(), 100);
    const auto shortcut = hypergeometric_prime_set(kAlpha, kBeta, 100);
    EXPECT_EQ(admitted(general), primes_above(3, 100));
    EXPECT_EQ(admitted(shortcut), primes_above(3, 100));
    EXPECT_EQ(certified_primes(general, shortcut), primes_above(3, 100));
    for (const auto& v : shortcut) {
        if (!v.in_S) continue;
        EXPECT_EQ(*v.h_uniform, 2);
        EXPECT_EQ(*v.h_min, v.p % 6 == 1 ? 1u : 2u);
    }
}

TEST(PrimeSet, ShortcutExcludesTwo) {
    const auto v = hypergeometric_prime_set({Rat(1, 5)}, {Rat(1)}, 10);
    EXPECT_EQ(admitted(v), (std::vector<Prime>{3, 7}));
    EXPECT_EQ(v[0].reasons[0].tag(), "EXCLUDED_SMALL");
    EXPECT_EQ(v[2].reasons[0].to_string(), "AMBIENT_NOT_UNIT(5)");
}

TEST(PrimeSet, OrderOneExcludesDenominatorPrimes) {
    for (const auto& alpha : {Rat(1, 2), Rat(1, 3), Rat(5, 7)}) {
        const auto op = order_one_operator(RatFunQ(PolyQ(alpha), PolyQ::z()));
        for (const auto& v : prime_set(op, 50)) {
            const bool divides = alpha.get_den() % v.p == 0;
            EXPECT_EQ(v.in_S, !divides) << alpha.get_str() << " " << v.p;
            if (v.in_S) {
                EXPECT_EQ(*v.h_min, multiplicative_order(v.p, alpha.get_den().get_ui()));
            }
        }
    }
}

TEST(PrimeSet, TrivialOperator) {
    const auto v = prime_set(parse_operator("D"), 10);
    EXPECT_EQ(admitted(v), (std::vector<Prime>{2, 3, 5, 7}));
    for (const auto& x : v) {
        EXPECT_EQ(*x.h_min, 1u);
        EXPECT_EQ(*x.h_uniform, 1);
    }
}

TEST(PrimeSet, GaussNormReason) {
    // Companion entries 1/(3 z) fail at 3 even though the exponent is 1/3 as well.
    const auto v = prime_set(parse_operator("D - 1/(9*z)"), 5);
    EXPECT_FALSE(v[1].in_S);
    bool gauss = false;
    for (const auto& r : v[1].reasons) gauss = gauss || r.kind == ReasonKind::GaussNorm;
    EXPECT_TRUE(gauss);
}

TEST(PrimeSet, RefusesNonFuchsian) {
    EXPECT_THROW(prime_set(parse_operator("D - 1/z^2"), 10), NotFuchsian);
}

TEST(Periods, MinimalDividesUniform) {
    for (std::uint64_t d = 1; d <= 60; ++d)
        for (auto p : primes_up_to(60)) {
            if (d % p == 0) continue;
            EXPECT_EQ(euler_phi(d) % minimal_period(d, p), 0u);
            // p^h fixes every fraction with denominator d modulo 1
            const auto h = minimal_period(d, p);
            for (std::uint64_t a = 1; a < d; ++a) EXPECT_EQ((powmod(p, h, d) * a) % d, a % d);
        }
    EXPECT_THROW(minimal_period(6, 3), InputError);
    EXPECT_EQ(minimal_period(kAlpha, kBeta, 7), 1u);
    EXPECT_EQ(minimal_period(kAlpha, kBeta, 5), 2u);
    EXPECT_EQ(uniform_period(kAlpha, kBeta), 2u);
}
