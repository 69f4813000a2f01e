#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primes.hpp"
#include "series.hpp"

namespace frobenize {

struct SearchLimits {
    unsigned j_max = 1;
    std::size_t deg_max = 16;
    /// Lower bound on the working precision.
    std::size_t min_precision = 0;
};

inline constexpr std::size_t kPrecisionGuard = 64;

inline std::size_t required_precision(unsigned levels, std::size_t deg_max) {
    return (static_cast<std::size_t>(levels) + 1) * (deg_max + 1) + kPrecisionGuard;
}

/// sum_{i <= j} r_i(z) f^{p^{i h}} = 0, checked modulo z^{verified_to}.
struct FrobeniusRelation {
    Prime p = 2;
    unsigned h = 1;
    unsigned j = 1;
    std::vector<FpPoly> r;
    /// Common degree bound D of the r_i that was minimal at level j.
    std::size_t degree = 0;
    std::size_t working_precision = 0;
    std::size_t verified_to = 0;
};

/// P(z, Y) = sum_k P_k(z) Y^k with P(z, f) = 0 modulo z^{verified_to}.
struct AlgebraicRelation {
    unsigned degree = 0;
    std::vector<FpPoly> coeffs;
    std::size_t coeff_degree = 0;
    std::size_t working_precision = 0;
    std::size_t verified_to = 0;
};

namespace detail {

struct BlockWitness {
    std::size_t min_degree;
    std::vector<FpPoly> polys;
};

/// Looks for polynomials c_0..c_m of degree <= D with sum c_i * blocks[i] = 0 mod z^N.
/// Columns are ordered by monomial degree, so the first free column of the reduced echelon
/// form yields a witness of minimal common degree.
inline std::optional<BlockWitness> minimal_block_relation(const std::vector<SeriesFp>& blocks, std::size_t D,
                                                           std::size_t N) {
    const Prime p = blocks.front().prime();
    const std::size_t m = blocks.size();
    const std::size_t cols = m * (D + 1);
    FpMatrix M(p, N, cols);
    for (std::size_t d = 0; d <= D; ++d)
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t col = d * m + i;
            const auto& g = blocks[i].coeffs();
            for (std::size_t row = d; row < N; ++row) M.at(row, col) = g[row - d];
        }
    const auto pivots = M.rref();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    if (free_col == cols) return std::nullopt;

    std::vector<Residue> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size() && pivots[r] < free_col; ++r)
        v[pivots[r]] = fp_neg(M.at(r, free_col), p);
    std::vector<FpPoly> polys;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Residue> c(D + 1, 0);
        for (std::size_t d = 0; d <= D; ++d) c[d] = v[d * m + i];
        polys.emplace_back(p, std::move(c));
    }
    // Highest-index nonzero polynomial monic.
    for (std::size_t i = m; i-- > 0;)
        if (!polys[i].is_zero()) {
            const Residue inv = fp_inv(polys[i].leading(), p);
            for (auto& q : polys) q = q.scaled(inv);
            break;
        }
    return BlockWitness{free_col / m, std::move(polys)};
}

/// sum polys[i] * blocks[i] truncated to the blocks' length.
inline bool combination_vanishes(const std::vector<FpPoly>& polys, const std::vector<SeriesFp>& blocks) {
    const Prime p = blocks.front().prime();
    const std::size_t N = blocks.front().size();
    std::vector<std::uint64_t> acc(N, 0);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& c = polys[i].coeffs();
        const auto& g = blocks[i].coeffs();
        for (std::size_t d = 0; d < c.size() && d < N; ++d) {
            if (!c[d]) continue;
            for (std::size_t k = d; k < N; ++k) acc[k] = (acc[k] + std::uint64_t{c[d]} * g[k - d]) % p;
        }
    }
    for (auto x : acc)
        if (x) return false;
    return true;
}

inline std::vector<SeriesFp> twist_blocks(const SeriesFp& f, unsigned h, unsigned j) {
    std::vector<SeriesFp> blocks;
    for (unsigned i = 0; i <= j; ++i) blocks.push_back(frobenius_twist(f, i * h));
    return blocks;
}

inline std::vector<SeriesFp> power_blocks(const SeriesFp& f, unsigned d) {
    std::vector<Residue> one(f.size(), 0);
    if (!one.empty()) one[0] = 1;
    std::vector<SeriesFp> blocks{SeriesFp(f.prime(), std::move(one))};
    for (unsigned k = 1; k <= d; ++k) blocks.push_back(blocks.back() * f);
    return blocks;
}

}  // namespace detail

/// Smallest level j <= j_max, then smallest degree D <= deg_max, admitting a Frobenius-semilinear
/// relation; re-verified against the series recomputed at twice the working precision.
inline std::optional<FrobeniusRelation> try_find_relation(const SeriesSource& source, unsigned h,
                                                          const SearchLimits& limits) {
    if (h == 0 || limits.j_max == 0) throw InputError("find_relation: h and j_max must be positive");
    std::size_t N = std::max(required_precision(limits.j_max, limits.deg_max), limits.min_precision);
    for (int attempt = 0; attempt < 3; ++attempt, N *= 2) {
        const SeriesFp f = source(N);
        if (f.is_zero()) throw InputError("find_relation: the series is zero");
        for (unsigned j = 1; j <= limits.j_max; ++j) {
            auto w = detail::minimal_block_relation(detail::twist_blocks(f, h, j), limits.deg_max, N);
            if (!w) continue;
            const SeriesFp f2 = source(2 * N);
            if (!detail::combination_vanishes(w->polys, detail::twist_blocks(f2, h, j))) break;
            return FrobeniusRelation{f.prime(), h, j, std::move(w->polys), w->min_degree, N, 2 * N};
        }
        // Either nothing within the limits (final) or a truncation artifact (retry deeper).
        bool spurious = false;
        for (unsigned j = 1; j <= limits.j_max && !spurious; ++j)
            spurious = detail::minimal_block_relation(detail::twist_blocks(f, h, j), limits.deg_max, N).has_value();
        if (!spurious) return std::nullopt;
    }
    return std::nullopt;
}

inline FrobeniusRelation find_relation(const SeriesSource& source, unsigned h, const SearchLimits& limits) {
    auto rel = try_find_relation(source, h, limits);
    if (!rel)
        throw NotFound("no Frobenius relation with j <= " + std::to_string(limits.j_max) +
                       " and degree <= " + std::to_string(limits.deg_max));
    return *rel;
}

/// Works at half the available length and verifies against the full series.
inline FrobeniusRelation find_relation(const SeriesFp& f, unsigned h, const SearchLimits& limits) {
    const std::size_t need = std::max(required_precision(limits.j_max, limits.deg_max), limits.min_precision);
    if (f.size() < 2 * need)
        throw InputError("precision insufficient: need " + std::to_string(2 * need) + " coefficients, have " +
                         std::to_string(f.size()));
    SearchLimits lim = limits;
    lim.min_precision = f.size() / 2;
    auto rel = try_find_relation([&](std::size_t N) { return f.truncated(std::min(N, f.size())); }, h, lim);
    if (!rel || rel->verified_to > f.size())
        throw NotFound("no Frobenius relation with j <= " + std::to_string(limits.j_max) +
                       " and degree <= " + std::to_string(limits.deg_max));
    return *rel;
}

/// Hermite-Pade search on 1, f, ..., f^d for the smallest algebraic degree d <= d_max.
inline std::optional<AlgebraicRelation> try_oracle_min_poly(const SeriesSource& source, unsigned d_max,
                                                             std::size_t D_max) {
    for (unsigned d = 1; d <= d_max; ++d) {
        const std::size_t N = required_precision(d, D_max);
        const SeriesFp f = source(N);
        auto w = detail::minimal_block_relation(detail::power_blocks(f, d), D_max, N);
        if (!w) continue;
        const SeriesFp f2 = source(2 * N);
        if (!detail::combination_vanishes(w->polys, detail::power_blocks(f2, d))) continue;
        return AlgebraicRelation{d, std::move(w->polys), w->min_degree, N, 2 * N};
    }
    return std::nullopt;
}

inline AlgebraicRelation oracle_min_poly(const SeriesSource& source, unsigned d_max, std::size_t D_max) {
    auto rel = try_oracle_min_poly(source, d_max, D_max);
    if (!rel)
        throw NotFound("no algebraic relation of degree <= " + std::to_string(d_max) + " with coefficient degree <= " +
                       std::to_string(D_max));
    return *rel;
}

inline AlgebraicRelation oracle_min_poly(const SeriesFp& f, unsigned d_max, std::size_t D_max) {
    const std::size_t need = required_precision(d_max, D_max);
    if (f.size() < 2 * need)
        throw InputError("precision insufficient: need " + std::to_string(2 * need) + " coefficients, have " +
                         std::to_string(f.size()));
    return oracle_min_poly([&](std::size_t N) { return f.truncated(std::min(N, f.size())); }, d_max, D_max);
}

struct CertifyOptions {
    /// Defaults to n^2.
    std::optional<unsigned> j_max;
    std::size_t deg_start = 8;
    std::size_t deg_cap = 512;
    std::size_t min_precision = 256;
    /// Overrides the dimension r of the solution space used for the refined bound.
    std::optional<unsigned> refined_r;
};

struct Certificate {
    FrobeniusRelation relation;
    unsigned n = 1;
    /// p^{j h}
    BigInt degree_bound;
    /// p^{n^2 h}
    BigInt theorem_bound;
    /// p^{n r h}
    BigInt refined_bound;
    unsigned r_used = 1;
    /// True when r came from the log-solution shortcut rather than the caller.
    bool r_heuristic = false;
};

/// Log-solution shortcut: when every integer exponent at 0 equals 0, only one solution is a
/// Laurent series, so r = 1. Otherwise r = n.
inline std::pair<unsigned, bool> refined_dimension(const std::vector<Rat>& exponents_at_zero, unsigned n) {
    bool has_zero = false;
    for (const auto& e : exponents_at_zero) {
        if (e == 0) has_zero = true;
        else if (is_integer(e)) return {n, false};
    }
    if (has_zero) return {1u, true};
    return {n, false};
}

/// Runs the escalating search for an order-n series whose operator has period h at p.
inline Certificate certify_series(const SeriesSource& source, Prime p, unsigned n, unsigned h,
                                  const std::vector<Rat>& exponents_at_zero, const CertifyOptions& opt) {
    const unsigned theorem_levels = n * n;
    const unsigned j_max = opt.j_max.value_or(theorem_levels);
    std::optional<FrobeniusRelation> rel;
    for (std::size_t deg = std::min(opt.deg_start, opt.deg_cap);; deg = std::min(deg * 2, opt.deg_cap)) {
        rel = try_find_relation(source, h, SearchLimits{j_max, deg, opt.min_precision});
        if (rel || deg >= opt.deg_cap) break;
    }
    if (!rel) {
        const std::string msg = "no Frobenius relation with j <= " + std::to_string(j_max) +
                                " and coefficient degree <= " + std::to_string(opt.deg_cap);
        if (j_max >= theorem_levels) throw RedFlag(msg + " (theorem predicts one with j <= n^2)");
        throw NotFound(msg);
    }
    Certificate c;
    c.relation = std::move(*rel);
    c.n = n;
    c.degree_bound = pow_big(p, static_cast<std::uint64_t>(c.relation.j) * h);
    c.theorem_bound = pow_big(p, static_cast<std::uint64_t>(theorem_levels) * h);
    if (opt.refined_r) {
        c.r_used = *opt.refined_r;
        c.r_heuristic = false;
    } else {
        auto [r, heuristic] = refined_dimension(exponents_at_zero, n);
        c.r_used = r;
        c.r_heuristic = heuristic;
    }
    c.refined_bound = pow_big(p, static_cast<std::uint64_t>(n) * c.r_used * h);
    return c;
}

}  // namespace frobenize
