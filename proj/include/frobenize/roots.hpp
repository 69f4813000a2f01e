#pragma once

#include <algorithm>
#include <vector>

#include "poly.hpp"

namespace frobenize {

struct RationalRoots {
    /// Rational roots with multiplicity, ascending.
    std::vector<Rat> roots;
    /// Monic cofactor free of rational roots: P = lc(P) * prod(z - root) * remainder.
    PolyQ remainder;
};

/// Rational-root extraction by the rational root theorem.
inline RationalRoots rational_roots(const PolyQ& P) {
    if (P.is_zero()) throw InputError("rational_roots of the zero polynomial");
    RationalRoots out;
    const std::size_t zeros = P.low_order();
    out.roots.assign(zeros, Rat(0));
    PolyQ q = P.shift_down(zeros).monic();

    if (q.degree() > 0) {
        BigInt den_lcm = 1;
        for (const auto& c : q.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
        const BigInt lead = Rat(q.leading() * Rat(den_lcm)).get_num();
        const BigInt constant = Rat(q.coeff(0) * Rat(den_lcm)).get_num();
        const auto nums = divisors(constant);
        const auto dens = divisors(lead);
        std::vector<Rat> candidates;
        for (const auto& u : nums)
            for (const auto& v : dens) {
                Rat r(u, v);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            if (q.degree() <= 0) break;
            while (q.degree() > 0 && q.eval(r) == 0) {
                q = divmod(q, PolyQ::linear(r)).first;
                out.roots.push_back(r);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.remainder = q.monic();
    return out;
}

}  // namespace frobenize
