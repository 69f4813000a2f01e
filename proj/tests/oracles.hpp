#pragma once

// Reference computations that avoid the library code paths they check.

#include <random>
#include <vector>

#include "frobenize/frobenize.hpp"

namespace oracle {

using frobenize::BigInt;
using frobenize::Rat;

/// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t rank_q(std::vector<std::vector<Rat>> m) {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Jordan matrix with one integer eigenvalue per residue group.
inline std::vector<std::vector<Rat>> jordan_matrix(const frobenize::JordanType& jt) {
    const std::size_t n = jt.dimension();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    std::size_t pos = 0;
    long lambda = 1;
    for (const auto& g : jt.groups()) {
        for (auto s : g.sizes) {
            for (std::size_t i = 0; i < s; ++i) {
                M[pos + i][pos + i] = lambda;
                if (i + 1 < s) M[pos + i][pos + i + 1] = 1;
            }
            pos += s;
        }
        ++lambda;
    }
    return M;
}

/// dim {X : XM = MX}, from the rank of X -> MX - XM on n^2 unknowns.
inline std::size_t commutant_dimension(const frobenize::JordanType& jt) {
    const auto M = jordan_matrix(jt);
    const std::size_t n = M.size();
    std::vector<std::vector<Rat>> A(n * n, std::vector<Rat>(n * n, Rat(0)));
    // Row (i,j) of MX - XM; unknown X[k][l] at column k*n + l.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto& row = A[i * n + j];
            for (std::size_t k = 0; k < n; ++k) {
                row[k * n + j] += M[i][k];
                row[i * n + k] -= M[k][j];
            }
        }
    return n * n - rank_q(A);
}

inline void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    partitions(n, n, cur, out);
    return out;
}

/// Every Jordan type of dimension n up to relabeling eigenvalues.
inline std::vector<frobenize::JordanType> all_jordan_types(std::size_t n) {
    std::vector<frobenize::JordanType> out;
    for (const auto& mult : partitions(n)) {
        std::vector<std::vector<std::vector<std::size_t>>> choices;
        for (auto m : mult) choices.push_back(partitions(m));
        std::vector<std::size_t> idx(mult.size(), 0);
        for (;;) {
            std::vector<frobenize::JordanBlockGroup> groups;
            for (std::size_t g = 0; g < mult.size(); ++g)
                groups.push_back({Rat(static_cast<long>(g), static_cast<long>(mult.size() + 1)), choices[g][idx[g]]});
            out.emplace_back(n, groups);
            std::size_t g = 0;
            while (g < mult.size() && ++idx[g] == choices[g].size()) idx[g++] = 0;
            if (g == mult.size()) break;
        }
    }
    return out;
}

/// Fuchs' criterion: the monic D^k coefficient has a pole of order <= n - k at every finite point
/// and decays like z^{-(n-k)} at infinity.
inline bool fuchs_pole_order_test(const frobenize::DiffOp& op) {
    const auto m = frobenize::to_ddz_monic(op);
    const std::size_t n = m.order();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = m.coeff(k);
        if (a.is_zero()) continue;
        auto rr = frobenize::rational_roots(a.den());
        for (const auto& x : rr.roots)
            if (a.pole_order(x) > n - k) return false;
        if (a.num().degree() - a.den().degree() > -static_cast<long>(n - k)) return false;
    }
    return true;
}

/// Indicial polynomial at a finite point from the leading Laurent terms of the monic coefficients,
/// sum_k c_k lambda (lambda - 1) ... (lambda - k + 1).
inline frobenize::PolyQ indicial_by_falling_factorials(const frobenize::DiffOp& op, const Rat& gamma) {
    const auto m = frobenize::to_ddz_monic(op);
    const std::size_t n = m.order();
    frobenize::PolyQ out;
    frobenize::PolyQ falling(1);
    for (std::size_t k = 0; k <= n; ++k) {
        const auto a = m.coeff(k).shifted(gamma);
        if (!a.is_zero()) {
            const long lead_order = static_cast<long>(a.num().low_order()) - static_cast<long>(a.den().low_order());
            // z^{n-k} a(z) at z = 0
            if (lead_order + static_cast<long>(n - k) == 0)
                out += falling * (a.num().coeff(a.num().low_order()) / a.den().coeff(a.den().low_order()));
        }
        falling *= frobenize::PolyQ({Rat(-static_cast<long>(k)), Rat(1)});
    }
    return out;
}

/// Series over F_p raised to p^e by repeated multiplication.
inline frobenize::SeriesFp power(const frobenize::SeriesFp& f, std::uint64_t e) {
    std::vector<frobenize::Residue> one(f.size(), 0);
    if (!one.empty()) one[0] = 1;
    frobenize::SeriesFp r(f.prime(), one), b = f;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

/// Checks sum r_i f^{p^{ih}} = 0 to the series length with powers formed by multiplication.
inline bool relation_holds(const std::vector<frobenize::FpPoly>& r, const frobenize::SeriesFp& f, unsigned h) {
    const frobenize::Prime p = f.prime();
    const std::size_t N = f.size();
    std::vector<std::uint64_t> acc(N, 0);
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const auto fi = power(f, e);
        const auto& c = r[i].coeffs();
        for (std::size_t d = 0; d < c.size(); ++d)
            for (std::size_t k = d; k < N; ++k) acc[k] = (acc[k] + std::uint64_t{c[d]} * fi[k - d]) % p;
        for (unsigned t = 0; t < h; ++t) e *= p;
    }
    for (auto x : acc)
        if (x) return false;
    return true;
}

/// sum_k P_k(z) f^k = 0 to the series length.
inline bool polynomial_relation_holds(const std::vector<frobenize::FpPoly>& P, const frobenize::SeriesFp& f) {
    const frobenize::Prime p = f.prime();
    const std::size_t N = f.size();
    std::vector<std::uint64_t> acc(N, 0);
    for (std::size_t k = 0; k < P.size(); ++k) {
        const auto fk = power(f, k);
        const auto& c = P[k].coeffs();
        for (std::size_t d = 0; d < c.size(); ++d)
            for (std::size_t i = d; i < N; ++i) acc[i] = (acc[i] + std::uint64_t{c[d]} * fk[i - d]) % p;
    }
    for (auto x : acc)
        if (x) return false;
    return true;
}

/// binom(2k, k)^power / 4^{k power} mod p, through exact binomials.
inline frobenize::SeriesFp central_binomial_series(frobenize::Prime p, std::size_t N, unsigned power) {
    std::vector<frobenize::Residue> c(N);
    for (std::size_t k = 0; k < N; ++k) {
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * k, k);
        BigInt num = 1, den = 1;
        for (unsigned i = 0; i < power; ++i) {
            num *= b;
            den *= frobenize::pow_big(4, k);
        }
        c[k] = frobenize::reduce_rat(Rat(num, den), p);
    }
    return frobenize::SeriesFp(p, std::move(c));
}

/// Random nonzero rational with bounded numerator and denominator.
inline Rat random_rat(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

/// Random rational in (0, 1) with denominator in [2, max_den].
inline Rat random_unit_interval(std::mt19937_64& rng, long max_den) {
    std::uniform_int_distribution<long> den(2, max_den);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(1, d - 1);
    Rat r(num(rng), d);
    r.canonicalize();
    return r;
}

/// Hypergeometric parameters in (0, 1] with all alpha_i - beta_j non-integral.
inline std::pair<std::vector<Rat>, std::vector<Rat>> random_hypergeometric(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        std::vector<Rat> alpha, beta;
        for (std::size_t i = 0; i < n; ++i) alpha.push_back(random_unit_interval(rng, 12));
        for (std::size_t i = 0; i + 1 < n; ++i) beta.push_back(random_unit_interval(rng, 12));
        beta.push_back(Rat(1));
        if (frobenize::differences_avoid_integers(alpha, beta)) return {alpha, beta};
    }
}

}  // namespace oracle
