#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "diffop.hpp"
#include "roots.hpp"

namespace frobenize {

struct ExponentReport {
    SingularPoint point;
    /// Ascending, with multiplicity.
    std::vector<Rat> exponents;
    bool regular = true;
};

struct PointRegularity {
    SingularPoint point;
    bool regular = true;
};

struct FuchsReport {
    bool fuchsian = true;
    std::vector<PointRegularity> points;
    std::vector<SingularPoint> offending;
};

/// Finite singular points: poles of the monic d/dz coefficients plus declared points.
inline std::vector<Rat> finite_singular_points(const DiffOp& op) {
    const DiffOp m = to_ddz_monic(op);
    std::vector<Rat> pts(op.declared_points().begin(), op.declared_points().end());
    for (std::size_t i = 0; i < m.order(); ++i) {
        const PolyQ& den = m.coeff(i).den();
        if (den.degree() <= 0) continue;
        auto rr = rational_roots(den);
        if (rr.remainder.degree() > 0)
            throw SplitFailure("denominator factor " + rr.remainder.to_string() +
                               " has no rational roots");
        pts.insert(pts.end(), rr.roots.begin(), rr.roots.end());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

inline bool infinity_is_singular(const DiffOp& op) {
    const DiffOp inv = invert_variable(op);
    for (std::size_t i = 0; i < inv.order(); ++i)
        if (!inv.coeff(i).regular_at(Rat(0))) return true;
    return false;
}

inline std::vector<SingularPoint> singular_points(const DiffOp& op) {
    std::vector<SingularPoint> out;
    for (auto& x : finite_singular_points(op)) out.push_back(SingularPoint::finite(x));
    if (infinity_is_singular(op)) out.push_back(SingularPoint::infinity());
    return out;
}

/// Monic delta-basis form with the point moved to 0 (q_n = 1).
inline DiffOp local_delta_form(const DiffOp& op, const SingularPoint& pt) {
    const DiffOp ddz = to_ddz_monic(op);
    if (pt.is_infinity()) return change_basis(invert_variable(ddz), Basis::Delta).monic();
    return to_delta_at(ddz, pt.value()).monic();
}

inline bool is_regular_point(const DiffOp& op, const SingularPoint& pt) {
    const DiffOp q = local_delta_form(op, pt);
    for (const auto& c : q.coeffs())
        if (!c.regular_at(Rat(0))) return false;
    return true;
}

inline FuchsReport is_fuchsian(const DiffOp& op) {
    FuchsReport r;
    for (const auto& pt : singular_points(op)) {
        const bool ok = is_regular_point(op, pt);
        r.points.push_back({pt, ok});
        if (!ok) {
            r.fuchsian = false;
            r.offending.push_back(pt);
        }
    }
    return r;
}

/// lambda^n + q_{n-1}(0) lambda^{n-1} + ... + q_0(0) in the local delta form.
inline PolyQ indicial_polynomial(const DiffOp& op, const SingularPoint& pt) {
    const DiffOp q = local_delta_form(op, pt);
    std::vector<Rat> c;
    for (const auto& a : q.coeffs()) {
        if (!a.regular_at(Rat(0)))
            throw NotFuchsian("irregular singular point at " + pt.to_string());
        c.push_back(a.eval(Rat(0)));
    }
    return PolyQ(std::move(c));
}

inline ExponentReport exponents(const DiffOp& op, const SingularPoint& pt) {
    const PolyQ ind = indicial_polynomial(op, pt);
    auto rr = rational_roots(ind);
    if (rr.remainder.degree() > 0)
        throw SplitFailure("indicial polynomial at " + pt.to_string() + " has non-rational roots (" +
                           rr.remainder.to_string("lambda") + ")");
    return {pt, std::move(rr.roots), true};
}

/// Exponent reports for every singular point; throws when the operator is not Fuchsian.
inline std::vector<ExponentReport> exponent_table(const DiffOp& op) {
    std::vector<ExponentReport> out;
    for (const auto& pt : singular_points(op)) out.push_back(exponents(op, pt));
    return out;
}

/// Value (m - 1) n (n - 1) / 2 of the Fuchs relation, m = number of finite singular points.
inline Rat fuchs_relation_value(std::size_t finite_points, std::size_t n) {
    return Rat(static_cast<long>(finite_points) - 1) * Rat(static_cast<long>(n * (n - 1))) / 2;
}

/// Sum of exponents over finite singular points plus the exponents at infinity.
inline Rat exponent_sum(const DiffOp& op) {
    Rat s = 0;
    for (const auto& x : finite_singular_points(op))
        for (const auto& e : exponents(op, SingularPoint::finite(x)).exponents) s += e;
    for (const auto& e : exponents(op, SingularPoint::infinity()).exponents) s += e;
    return s;
}

}  // namespace frobenize
