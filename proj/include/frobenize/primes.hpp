#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "local.hpp"

namespace frobenize {

/// Nonzero rationals whose p-adic unit condition defines the admissible primes.
struct AmbientSet {
    std::vector<Rat> elements;
    /// Shift m used for the gamma + m entries: smallest m >= 1 with -m not singular.
    unsigned m_shift = 1;
};

enum class ReasonKind { AmbientNotUnit, GaussNorm, ExcludedSmall };

struct Reason {
    ReasonKind kind;
    std::string detail;

    std::string tag() const {
        switch (kind) {
            case ReasonKind::AmbientNotUnit: return "AMBIENT_NOT_UNIT";
            case ReasonKind::GaussNorm: return "GAUSS_NORM";
            case ReasonKind::ExcludedSmall: return "EXCLUDED_SMALL";
        }
        return "UNKNOWN";
    }
    std::string to_string() const { return tag() + "(" + detail + ")"; }
};

struct PrimeVerdict {
    Prime p = 2;
    bool in_S = false;
    std::vector<Reason> reasons;
    std::optional<BigInt> h_uniform;
    std::optional<std::uint64_t> h_min;
};

/// Exponent data and companion entries of an eligible operator, computed once.
struct OperatorProfile {
    DiffOp monic;
    std::vector<Rat> finite_points;
    std::vector<ExponentReport> exponent_table;
    std::vector<RatFunQ> companion_entries;
};

/// Requires a Fuchsian operator with rational singular points and rational exponents.
inline OperatorProfile profile_operator(const DiffOp& op) {
    OperatorProfile prof{to_ddz_monic(op), {}, {}, {}};
    prof.finite_points = finite_singular_points(op);
    const auto fr = is_fuchsian(op);
    if (!fr.fuchsian) {
        std::string where;
        for (const auto& pt : fr.offending) where += (where.empty() ? "" : ", ") + pt.to_string();
        throw NotFuchsian("operator is not Fuchsian at " + where);
    }
    prof.exponent_table = exponent_table(op);
    for (const auto& row : companion_matrix(op))
        for (const auto& e : row)
            if (!e.is_zero()) prof.companion_entries.push_back(e);
    return prof;
}

inline AmbientSet build_ambient_set(const OperatorProfile& prof) {
    AmbientSet s;
    const auto& pts = prof.finite_points;
    unsigned m = 1;
    while (std::find(pts.begin(), pts.end(), Rat(-static_cast<long>(m))) != pts.end()) ++m;
    s.m_shift = m;
    std::vector<Rat> el;
    for (const auto& g : pts) {
        el.push_back(g);
        el.push_back(g + Rat(m));
    }
    for (const auto& a : pts)
        for (const auto& b : pts)
            if (a != b) el.push_back(a - b);
    for (const auto& rep : prof.exponent_table)
        for (const auto& e : rep.exponents) el.push_back(Rat(e.get_den()));
    el.erase(std::remove(el.begin(), el.end(), Rat(0)), el.end());
    std::sort(el.begin(), el.end());
    el.erase(std::unique(el.begin(), el.end()), el.end());
    s.elements = std::move(el);
    return s;
}

inline AmbientSet build_ambient_set(const DiffOp& op) { return build_ambient_set(profile_operator(op)); }

/// lcm of all exponent denominators over the singular points.
inline std::uint64_t exponent_denominator_lcm(const std::vector<ExponentReport>& table) {
    BigInt d = 1;
    for (const auto& rep : table)
        for (const auto& e : rep.exponents) d = lcm(d, e.get_den());
    return to_u64(d);
}

/// Product of |(Z/b Z)^x| over all exponent denominators b (t = 1 for rational points).
inline BigInt product_period(const std::vector<ExponentReport>& table) {
    BigInt l = 1;
    for (const auto& rep : table)
        for (const auto& e : rep.exponents) l *= from_u64(euler_phi(to_u64(e.get_den())));
    return l;
}

inline BigInt uniform_period(const DiffOp& op) { return product_period(profile_operator(op).exponent_table); }

/// lcm of the parameter denominators.
inline std::uint64_t parameter_denominator_lcm(const std::vector<Rat>& alpha, const std::vector<Rat>& beta) {
    BigInt d = 1;
    for (const auto& a : alpha) d = lcm(d, a.get_den());
    for (const auto& b : beta) d = lcm(d, b.get_den());
    return to_u64(d);
}

/// phi(d_{alpha,beta}).
inline std::uint64_t uniform_period(const std::vector<Rat>& alpha, const std::vector<Rat>& beta) {
    return euler_phi(parameter_denominator_lcm(alpha, beta));
}

/// Smallest h with p^h e = e (mod Z) for every exponent e with lcm of denominators d.
inline std::uint64_t minimal_period(std::uint64_t d, Prime p) {
    if (std::gcd(static_cast<std::uint64_t>(p), d) != 1)
        throw InputError("minimal_period: p = " + std::to_string(p) + " divides an exponent denominator");
    return multiplicative_order(p, d);
}

inline std::uint64_t minimal_period(const DiffOp& op, Prime p) {
    return minimal_period(exponent_denominator_lcm(profile_operator(op).exponent_table), p);
}

inline std::uint64_t minimal_period(const std::vector<Rat>& alpha, const std::vector<Rat>& beta, Prime p) {
    return minimal_period(parameter_denominator_lcm(alpha, beta), p);
}

inline PrimeVerdict prime_verdict(const OperatorProfile& prof, const AmbientSet& ambient, Prime p) {
    PrimeVerdict v;
    v.p = p;
    for (const auto& u : ambient.elements)
        if (vp(u, p).value() != 0) v.reasons.push_back({ReasonKind::AmbientNotUnit, u.get_str()});
    for (const auto& e : prof.companion_entries)
        if (gauss_valuation(e, p) < 0) v.reasons.push_back({ReasonKind::GaussNorm, e.to_string()});
    v.in_S = v.reasons.empty();
    if (v.in_S) {
        v.h_uniform = product_period(prof.exponent_table);
        v.h_min = minimal_period(exponent_denominator_lcm(prof.exponent_table), p);
    }
    return v;
}

/// Verdicts for every prime p <= bound, ascending.
inline std::vector<PrimeVerdict> prime_set(const DiffOp& op, std::int64_t bound) {
    const auto prof = profile_operator(op);
    const auto ambient = build_ambient_set(prof);
    std::vector<PrimeVerdict> out;
    for (auto p : primes_up_to(bound)) out.push_back(prime_verdict(prof, ambient, p));
    return out;
}

/// Parameter-valuation test for the hypergeometric family: p != 2 and all parameters p-integral.
inline std::vector<PrimeVerdict> hypergeometric_prime_set(const std::vector<Rat>& alpha,
                                                          const std::vector<Rat>& beta, std::int64_t bound) {
    const std::uint64_t d = parameter_denominator_lcm(alpha, beta);
    std::vector<PrimeVerdict> out;
    for (auto p : primes_up_to(bound)) {
        PrimeVerdict v;
        v.p = p;
        if (p == 2) v.reasons.push_back({ReasonKind::ExcludedSmall, "2"});
        std::vector<BigInt> dens;
        for (const auto* list : {&alpha, &beta})
            for (const auto& x : *list)
                if (vp(x, p) < Valuation::finite(0)) dens.push_back(x.get_den());
        std::sort(dens.begin(), dens.end());
        dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
        for (const auto& d : dens) v.reasons.push_back({ReasonKind::AmbientNotUnit, d.get_str()});
        v.in_S = v.reasons.empty();
        if (v.in_S) {
            v.h_uniform = from_u64(euler_phi(d));
            v.h_min = minimal_period(d, p);
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Primes admitted by both verdict lists.
inline std::vector<Prime> certified_primes(const std::vector<PrimeVerdict>& a, const std::vector<PrimeVerdict>& b) {
    std::vector<Prime> out;
    for (const auto& x : a) {
        if (!x.in_S) continue;
        for (const auto& y : b)
            if (y.p == x.p && y.in_S) out.push_back(x.p);
    }
    return out;
}

inline std::vector<Prime> admitted(const std::vector<PrimeVerdict>& v) {
    std::vector<Prime> out;
    for (const auto& x : v)
        if (x.in_S) out.push_back(x.p);
    return out;
}

}  // namespace frobenize
