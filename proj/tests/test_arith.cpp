#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace frobenize;

TEST(Primes, TrialDivisionAgreesWithGmp) {
    for (std::uint64_t n = 0; n < 5000; ++n) {
        BigInt b = static_cast<unsigned long>(n);
        EXPECT_EQ(is_prime(n), mpz_probab_prime_p(b.get_mpz_t(), 30) > 0) << n;
    }
    EXPECT_TRUE(is_prime(2147483647));
    EXPECT_THROW(require_prime(1), InputError);
    EXPECT_THROW(require_prime(91), InputError);
    EXPECT_THROW(require_prime(std::int64_t{1} << 31), InputError);
    EXPECT_EQ(primes_up_to(20), (std::vector<Prime>{2, 3, 5, 7, 11, 13, 17, 19}));
}

TEST(Valuation, RationalValuations) {
    EXPECT_EQ(vp(Rat(12), 2), Valuation::finite(2));
    EXPECT_EQ(vp(Rat(1, 18), 3), Valuation::finite(-2));
    EXPECT_EQ(vp(Rat(-5, 7), 5), Valuation::finite(1));
    EXPECT_TRUE(vp(Rat(0), 3).is_infinite());
    EXPECT_THROW(vp(Rat(0), 3).value(), InputError);
    EXPECT_THROW(vp(Rat(3), 4), InputError);
    EXPECT_EQ(vp(Rat(0), 3).to_string(), "+inf");
}

TEST(Valuation, MultiplicativeAndUltrametric) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const Rat x = oracle::random_rat(rng, 400, 400), y = oracle::random_rat(rng, 400, 400);
        for (Prime p : {2u, 3u, 5u, 7u}) {
            EXPECT_EQ(vp(x * y, p), vp(x, p) + vp(y, p));
            const Valuation lo = vp(x, p) < vp(y, p) ? vp(x, p) : vp(y, p);
            EXPECT_TRUE(lo <= vp(x + y, p));
            if (!(vp(x, p) == vp(y, p))) {
                EXPECT_EQ(vp(x + y, p), lo);
            }
        }
    }
}

TEST(Integers, PhiOrderAndFactoring) {
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(6), 2u);
    EXPECT_EQ(euler_phi(36), 12u);
    EXPECT_EQ(multiplicative_order(7, 6), 1u);
    EXPECT_EQ(multiplicative_order(5, 6), 2u);
    EXPECT_EQ(multiplicative_order(2, 7), 3u);
    EXPECT_EQ(multiplicative_order(5, 1), 1u);
    EXPECT_THROW(multiplicative_order(3, 6), InputError);
    for (std::uint64_t d = 1; d < 200; ++d)
        for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 101u}) {
            if (std::gcd(p, d) != 1) continue;
            const auto h = multiplicative_order(p, d);
            EXPECT_EQ(euler_phi(d) % h, 0u);
            EXPECT_EQ(powmod(p, h, d), 1 % d);
            for (std::uint64_t k = 1; k < h; ++k) EXPECT_NE(powmod(p, k, d), 1u);
        }
    const auto ds = divisors(BigInt(360));
    EXPECT_EQ(ds.size(), 24u);
    const BigInt big = BigInt("1000000007") * BigInt("998244353");
    EXPECT_EQ(divisors(big).size(), 4u);
    EXPECT_EQ(to_u64(from_u64(0xFFFFFFFFFFFFull)), 0xFFFFFFFFFFFFull);
}

TEST(Rationals, ParseAndFractionalPart) {
    EXPECT_EQ(parse_rational("2/4"), Rat(1, 2));
    EXPECT_EQ(parse_rational("-3"), Rat(-3));
    EXPECT_EQ(parse_rational(" +5/10 "), Rat(1, 2));
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("a/b"), InputError);
    EXPECT_THROW(parse_rational("1/-2"), InputError);
    EXPECT_EQ(parse_rational_list("1/2,2/3,1"), (std::vector<Rat>{Rat(1, 2), Rat(2, 3), Rat(1)}));
    EXPECT_EQ(frac_part(Rat(-1, 3)), Rat(2, 3));
    EXPECT_EQ(frac_part(Rat(7, 2)), Rat(1, 2));
    EXPECT_EQ(frac_part(Rat(-2)), Rat(0));
}

TEST(Polynomials, RingLawsAndDivision) {
    std::mt19937_64 rng(5);
    auto rnd = [&](int deg) {
        std::vector<Rat> c;
        for (int i = 0; i <= deg; ++i) c.push_back(oracle::random_rat(rng, 9, 5));
        return PolyQ(c);
    };
    for (int t = 0; t < 100; ++t) {
        PolyQ a = rnd(4), b = rnd(3), c = rnd(2);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
        const Rat x = oracle::random_rat(rng, 7, 7);
        EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
        EXPECT_EQ(a.shifted(x).eval(Rat(0)), a.eval(x));
        const PolyQ g = gcd(a * c, b * c);
        EXPECT_TRUE(divmod(g, c.monic()).second.is_zero());
    }
    EXPECT_EQ(PolyQ::linear(Rat(2)).pow(2), PolyQ({Rat(4), Rat(-4), Rat(1)}));
    EXPECT_EQ(PolyQ({Rat(1), Rat(0), Rat(3)}).to_string(), "3*z^2 + 1");
    EXPECT_EQ(PolyQ().degree(), -1);
}

TEST(RationalFunctions, NormalizationAndInversion) {
    const RatFunQ f(PolyQ({Rat(-1), Rat(0), Rat(1)}), PolyQ({Rat(-2), Rat(2)}));  // (z^2-1)/(2z-2)
    EXPECT_TRUE(f.is_polynomial());
    EXPECT_EQ(f, RatFunQ(PolyQ({Rat(1, 2), Rat(1, 2)})));
    const RatFunQ g(PolyQ(1), PolyQ({Rat(0), Rat(-1), Rat(1)}));  // 1/(z^2 - z)
    EXPECT_EQ(g.pole_order(Rat(0)), 1u);
    EXPECT_EQ(g.inverted().inverted(), g);
    EXPECT_EQ(g.inverted().eval(Rat(3)), g.eval(Rat(1, 3)));
    EXPECT_THROW(g.eval(Rat(1)), InputError);
    EXPECT_EQ((g * g.pow(-1)), RatFunQ(1));
    EXPECT_EQ(g.derivative().eval(Rat(2)), Rat(-3, 4));
}

TEST(GaussNorm, ContentValuations) {
    const RatFunQ q(PolyQ(Rat(1, 2)), PolyQ({Rat(0), Rat(1)}));  // 1/(2z)
    EXPECT_EQ(gauss_valuation(q, 2), -1);
    EXPECT_EQ(gauss_valuation(q, 3), 0);
    const RatFunQ r(PolyQ({Rat(9), Rat(3)}), PolyQ({Rat(1, 5), Rat(1)}));
    EXPECT_EQ(gauss_valuation(r, 3), 1);
    EXPECT_EQ(gauss_valuation(r, 5), 1);
    EXPECT_THROW(gauss_valuation(RatFunQ(0), 3), InputError);
    // Multiplicative (Gauss's lemma)
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        PolyQ a({oracle::random_rat(rng, 30, 30), oracle::random_rat(rng, 30, 30), oracle::random_rat(rng, 30, 30)});
        PolyQ b({oracle::random_rat(rng, 30, 30), oracle::random_rat(rng, 30, 30)});
        for (Prime p : {2u, 3u, 5u})
            EXPECT_EQ(gauss_valuation(RatFunQ(a * b), p), gauss_valuation(RatFunQ(a), p) + gauss_valuation(RatFunQ(b), p));
    }
}

TEST(RationalRoots, FactorsWithMultiplicity) {
    const PolyQ P = PolyQ::linear(Rat(1, 2)).pow(2) * PolyQ::linear(Rat(-3)) * PolyQ({Rat(1), Rat(0), Rat(1)}) *
                    PolyQ::z() * Rat(6);
    const auto rr = rational_roots(P);
    EXPECT_EQ(rr.roots, (std::vector<Rat>{Rat(-3), Rat(0), Rat(1, 2), Rat(1, 2)}));
    EXPECT_EQ(rr.remainder, PolyQ({Rat(1), Rat(0), Rat(1)}));
    EXPECT_THROW(rational_roots(PolyQ()), InputError);
}

TEST(FiniteField, ArithmeticAndKernel) {
    const Prime p = 7;
    for (Residue a = 1; a < p; ++a) EXPECT_EQ(fp_mul(a, fp_inv(a, p), p), 1u);
    EXPECT_EQ(reduce_rat(Rat(1, 2), 7), 4u);
    EXPECT_EQ(reduce_rat(Rat(-1, 3), 7), 2u);
    EXPECT_THROW(reduce_rat(Rat(1, 7), 7), InputError);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const std::size_t rows = 3 + rng() % 5, cols = 3 + rng() % 6;
        std::vector<std::vector<Residue>> a(rows, std::vector<Residue>(cols));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<Residue>(rng() % 3 == 0 ? rng() % p : 0);
        const FpMatrix M(p, a);
        const auto K = fp_kernel(M);
        EXPECT_EQ(K.size() + fp_rank(M), cols);
        for (const auto& v : K)
            for (auto x : M.apply(v)) EXPECT_EQ(x, 0u);
    }
    const FpPoly f(5, {1, 2}), g(5, {3, 0, 1});
    EXPECT_EQ((f * g).to_string(), "2*z^3 + z^2 + z + 3");
    EXPECT_EQ(FpPoly(5, {0, 0, 3}).monic(), FpPoly(5, {0, 0, 1}));
}
