#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "families.hpp"

namespace frobenize {

/// Conjugacy data of a local monodromy matrix. An eigenvalue exp(2 pi i r) is stored by its
/// residue r in [0, 1).
struct JordanBlockGroup {
    Rat residue;
    std::vector<std::size_t> sizes;
};

class JordanType {
public:
    JordanType(std::size_t n, std::vector<JordanBlockGroup> groups) : n_(n), groups_(std::move(groups)) {
        std::size_t total = 0;
        std::vector<Rat> seen;
        for (auto& g : groups_) {
            if (g.residue < 0 || g.residue >= 1) throw InputError("eigenvalue residue outside [0, 1)");
            if (std::find(seen.begin(), seen.end(), g.residue) != seen.end())
                throw InputError("duplicate eigenvalue residue " + g.residue.get_str());
            seen.push_back(g.residue);
            for (auto s : g.sizes) {
                if (s == 0) throw InputError("Jordan block of size 0");
                total += s;
            }
            std::sort(g.sizes.rbegin(), g.sizes.rend());
        }
        if (total != n_) throw InputError("Jordan block sizes do not add up to the dimension");
        std::sort(groups_.begin(), groups_.end(),
                  [](const auto& a, const auto& b) { return a.residue < b.residue; });
    }

    /// Groups equal residues (mod 1) of the given values into one block each (cyclic type).
    static JordanType cyclic_from(const std::vector<Rat>& values) {
        std::map<Rat, std::size_t> mult;
        for (const auto& v : values) ++mult[frac_part(v)];
        std::vector<JordanBlockGroup> g;
        for (auto& [r, m] : mult) g.push_back({r, {m}});
        return JordanType(values.size(), std::move(g));
    }

    /// Semisimple with the given residues (mod 1).
    static JordanType semisimple_from(const std::vector<Rat>& values) {
        std::map<Rat, std::size_t> mult;
        for (const auto& v : values) ++mult[frac_part(v)];
        std::vector<JordanBlockGroup> g;
        for (auto& [r, m] : mult) g.push_back({r, std::vector<std::size_t>(m, 1)});
        return JordanType(values.size(), std::move(g));
    }

    /// Scalar times a pseudo-reflection: eigenvalue `common` on a hyperplane and one `special`
    /// eigenvalue. When the two coincide the matrix is a (scaled) transvection, blocks {2, 1^{n-2}}.
    static JordanType pseudo_reflection(std::size_t n, const Rat& common, const Rat& special) {
        const Rat c = frac_part(common), s = frac_part(special);
        if (n == 1) return JordanType(1, {{s, {1}}});
        if (c == s) {
            std::vector<std::size_t> sizes{2};
            sizes.resize(n - 1, 1);
            return JordanType(n, {{c, sizes}});
        }
        return JordanType(n, {{c, std::vector<std::size_t>(n - 1, 1)}, {s, {1}}});
    }

    static JordanType scalar(std::size_t n, const Rat& residue) {
        return JordanType(n, {{frac_part(residue), std::vector<std::size_t>(n, 1)}});
    }

    std::size_t dimension() const noexcept { return n_; }
    const std::vector<JordanBlockGroup>& groups() const noexcept { return groups_; }

    std::string to_string() const {
        std::string out;
        for (const auto& g : groups_) {
            if (!out.empty()) out += " ";
            out += "[" + g.residue.get_str() + ":";
            for (std::size_t i = 0; i < g.sizes.size(); ++i)
                out += (i ? "," : "") + std::to_string(g.sizes[i]);
            out += "]";
        }
        return out;
    }

    friend bool operator==(const JordanType& a, const JordanType& b) {
        if (a.n_ != b.n_ || a.groups_.size() != b.groups_.size()) return false;
        for (std::size_t i = 0; i < a.groups_.size(); ++i)
            if (a.groups_[i].residue != b.groups_[i].residue || a.groups_[i].sizes != b.groups_[i].sizes)
                return false;
        return true;
    }

private:
    std::size_t n_;
    std::vector<JordanBlockGroup> groups_;
};

/// Dimension of the commutant: sum over eigenvalues of sum_{i,j} min(b_i, b_j).
inline std::size_t centralizer_dim(const JordanType& jt) {
    std::size_t d = 0;
    for (const auto& g : jt.groups())
        for (auto a : g.sizes)
            for (auto b : g.sizes) d += std::min(a, b);
    return d;
}

/// Codimension of the centralizer.
inline std::size_t omega(const JordanType& jt) {
    return jt.dimension() * jt.dimension() - centralizer_dim(jt);
}

struct RigidityReport {
    bool applicable = false;
    std::vector<std::size_t> omegas;
    std::size_t sum = 0;
    std::size_t target = 0;
    bool rigid = false;
};

/// Katz's criterion: an irreducible tuple is rigid iff sum omega_i = 2(n^2 - 1).
inline RigidityReport katz_rigidity(const std::vector<JordanType>& data, std::size_t n, bool irreducible) {
    RigidityReport r;
    for (const auto& jt : data) {
        if (jt.dimension() != n)
            throw InputError("Jordan type of dimension " + std::to_string(jt.dimension()) +
                             " in a rank " + std::to_string(n) + " tuple");
        r.omegas.push_back(omega(jt));
        r.sum += r.omegas.back();
    }
    r.target = 2 * (n * n - 1);
    r.applicable = irreducible;
    r.rigid = irreducible && r.sum == r.target;
    return r;
}

struct LocalMonodromyData {
    std::vector<SingularPoint> points;
    std::vector<JordanType> types;
    bool irreducible = false;
};

/// Local monodromy of the hypergeometric operator at 0, 1 and infinity.
inline LocalMonodromyData hypergeometric_local_data(const std::vector<Rat>& alpha,
                                                    const std::vector<Rat>& beta) {
    const std::size_t n = alpha.size();
    if (n == 0 || beta.size() != n) throw InputError("hypergeometric data needs n alphas and n betas");
    std::vector<Rat> at_zero;
    for (const auto& b : beta) at_zero.push_back(Rat(1) - b);
    Rat special = -1;
    for (std::size_t i = 0; i < n; ++i) special += beta[i] - alpha[i];
    LocalMonodromyData d;
    d.points = {SingularPoint::finite(Rat(0)), SingularPoint::finite(Rat(1)), SingularPoint::infinity()};
    d.types = {JordanType::cyclic_from(at_zero), JordanType::pseudo_reflection(n, Rat(0), special),
               JordanType::cyclic_from(alpha)};
    d.irreducible = differences_avoid_integers(alpha, beta);
    return d;
}

/// Local monodromy of the Jordan-Pochhammer operator: n + 1 pseudo-reflections.
inline LocalMonodromyData pochhammer_local_data(const Rat& a, const std::vector<Rat>& alphas,
                                                const std::vector<Rat>& bs) {
    const std::size_t n = alphas.size();
    if (n == 0 || bs.size() != n) throw InputError("Jordan-Pochhammer data needs n alphas and n b's");
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return alphas[x] < alphas[y]; });
    for (std::size_t i = 1; i < n; ++i)
        if (alphas[order[i]] == alphas[order[i - 1]])
            throw InputError("Jordan-Pochhammer singular points must be pairwise distinct");

    LocalMonodromyData d;
    Rat bsum = 0;
    bool irreducible = !is_integer(a);
    for (const auto& b : bs) {
        bsum += b;
        irreducible = irreducible && !is_integer(b);
    }
    irreducible = irreducible && !is_integer(a + bsum);
    for (auto i : order) {
        d.points.push_back(SingularPoint::finite(alphas[i]));
        // exponents 0..n-2 and a + n - 1 + b_i
        d.types.push_back(JordanType::pseudo_reflection(n, Rat(0), a + bs[i]));
    }
    d.points.push_back(SingularPoint::infinity());
    // exponents -(a+1), ..., -(a+n-1) and -(a + sum b)
    d.types.push_back(JordanType::pseudo_reflection(n, -a, -(a + bsum)));
    d.irreducible = irreducible;
    return d;
}

/// Heuristic local data from exponents alone, taking every local monodromy semisimple.
inline LocalMonodromyData assume_semisimple_local_data(const std::vector<ExponentReport>& table,
                                                       bool irreducible) {
    LocalMonodromyData d;
    for (const auto& rep : table) {
        d.points.push_back(rep.point);
        d.types.push_back(JordanType::semisimple_from(rep.exponents));
    }
    d.irreducible = irreducible;
    return d;
}

}  // namespace frobenize
