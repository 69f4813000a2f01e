#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "local.hpp"

namespace frobenize {

/// Coefficients of prod (lambda + roots_i), index = power of lambda.
inline std::vector<Rat> expand_linear_product(const std::vector<Rat>& shifts) {
    std::vector<Rat> c{Rat(1)};
    for (const auto& s : shifts) {
        std::vector<Rat> next(c.size() + 1, Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i] * s;
            next[i + 1] += c[i];
        }
        c = std::move(next);
    }
    return c;
}

inline bool differences_avoid_integers(const std::vector<Rat>& alpha, const std::vector<Rat>& beta) {
    for (const auto& a : alpha)
        for (const auto& b : beta)
            if (is_integer(a - b)) return false;
    return true;
}

struct HypergeometricOperator {
    std::vector<Rat> alpha;
    std::vector<Rat> beta;
    /// -z (T + alpha_1)...(T + alpha_n) + (T + beta_1 - 1)...(T + beta_n - 1).
    DiffOp delta;
    /// alpha_i - beta_j avoids the integers; false only raises a warning.
    bool irreducible = true;

    DiffOp ddz() const { return to_ddz_monic(delta); }
};

inline HypergeometricOperator hypergeometric_operator(const std::vector<Rat>& alpha,
                                                      const std::vector<Rat>& beta) {
    if (alpha.empty() || alpha.size() != beta.size())
        throw InputError("hypergeometric operator needs n alphas and n betas (n >= 1)");
    std::vector<Rat> bshift;
    for (const auto& b : beta) bshift.push_back(b - 1);
    const auto A = expand_linear_product(alpha);
    const auto B = expand_linear_product(bshift);
    std::vector<RatFunQ> c;
    for (std::size_t k = 0; k < A.size(); ++k)
        c.emplace_back(PolyQ({B[k], -A[k]}));
    return {alpha, beta, DiffOp(Basis::Delta, std::move(c)), differences_avoid_integers(alpha, beta)};
}

/// Rising factorial (x)_k.
inline Rat rising(const Rat& x, std::size_t k) {
    Rat r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= x + Rat(static_cast<long>(i));
    return r;
}

inline Rat factorial(std::size_t k) {
    Rat r = 1;
    for (std::size_t i = 2; i <= k; ++i) r *= Rat(static_cast<long>(i));
    return r;
}

/// Jordan-Pochhammer operator, returned monic in the d/dz basis with the alphas declared singular.
inline DiffOp jordan_pochhammer_operator(const Rat& a, const std::vector<Rat>& alphas,
                                         const std::vector<Rat>& bs) {
    const std::size_t n = alphas.size();
    if (n == 0 || bs.size() != n) throw InputError("Jordan-Pochhammer needs n alphas and n b's (n >= 1)");
    std::vector<Rat> sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("Jordan-Pochhammer singular points must be pairwise distinct");

    PolyQ Q(1);
    for (const auto& x : alphas) Q *= PolyQ::linear(x);
    PolyQ R;
    for (std::size_t i = 0; i < n; ++i) {
        PolyQ term(bs[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) term *= PolyQ::linear(alphas[j]);
        R += term;
    }

    std::vector<PolyQ> c(n + 1);
    PolyQ dQ = Q;
    for (std::size_t k = 0; k <= n; ++k) {
        const Rat s = (k % 2 ? Rat(-1) : Rat(1)) * rising(a, k) / factorial(k);
        c[n - k] += dQ * s;
        dQ = dQ.derivative();
    }
    PolyQ dR = R;
    for (std::size_t k = 0; k < n; ++k) {
        const Rat s = (k % 2 ? Rat(1) : Rat(-1)) * rising(a + 1, k) / factorial(k);
        c[n - 1 - k] += dR * s;
        dR = dR.derivative();
    }
    std::vector<RatFunQ> coeffs(c.begin(), c.end());
    return DiffOp(Basis::DDZ, std::move(coeffs)).monic().with_declared_points(sorted);
}

/// y' - Q y, required to have only simple rational poles and to vanish at infinity.
inline DiffOp order_one_operator(const RatFunQ& Q) {
    if (!Q.is_zero()) {
        if (Q.den().degree() > 0) {
            auto rr = rational_roots(Q.den());
            if (rr.remainder.degree() > 0)
                throw SplitFailure("poles of Q are not rational: " + rr.remainder.to_string());
            for (std::size_t i = 1; i < rr.roots.size(); ++i)
                if (rr.roots[i] == rr.roots[i - 1])
                    throw NotFuchsian("Q has a pole of order > 1 at " + rr.roots[i].get_str());
        }
        if (Q.num().degree() >= Q.den().degree())
            throw NotFuchsian("Q does not vanish at infinity: irregular singularity at infinity");
    }
    return DiffOp(Basis::DDZ, {-Q, RatFunQ(1)});
}

/// Residue of Q at a simple pole x.
inline Rat simple_residue(const RatFunQ& Q, const Rat& x) {
    const PolyQ rest = divmod(Q.den(), PolyQ::linear(x)).first;
    return Q.num().eval(x) / rest.eval(x);
}

}  // namespace frobenize
