#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ratfun.hpp"

namespace frobenize {

/// D = d/dz or T = delta = z d/dz.
enum class Basis { DDZ, Delta };

/// Linear differential operator sum_i coeffs[i] * d^i over Q(z).
class DiffOp {
public:
    DiffOp(Basis basis, std::vector<RatFunQ> coeffs) : basis_(basis), c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.size() < 2) throw InputError("differential operator must have order >= 1");
    }

    Basis basis() const noexcept { return basis_; }
    std::size_t order() const noexcept { return c_.size() - 1; }
    const std::vector<RatFunQ>& coeffs() const noexcept { return c_; }
    const RatFunQ& coeff(std::size_t i) const { return c_.at(i); }
    const RatFunQ& leading() const { return c_.back(); }

    bool is_monic() const { return leading() == RatFunQ(1); }
    DiffOp monic() const {
        if (is_monic()) return *this;
        std::vector<RatFunQ> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(a / leading());
        DiffOp out(basis_, std::move(v));
        out.declared_ = declared_;
        return out;
    }

    /// Finite points a family constructor knows to be singular (zeros of a raw leading coefficient).
    const std::vector<Rat>& declared_points() const noexcept { return declared_; }
    DiffOp with_declared_points(std::vector<Rat> pts) const {
        DiffOp out = *this;
        out.declared_ = std::move(pts);
        return out;
    }

    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.basis_ == b.basis_ && a.c_ == b.c_;
    }

    std::string to_string() const {
        const char sym = basis_ == Basis::DDZ ? 'D' : 'T';
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string coeff = c_[i].to_string();
            const bool unit = c_[i] == RatFunQ(1);
            if (!out.empty()) out += " + ";
            if (i == 0) {
                out += "(" + coeff + ")";
                continue;
            }
            if (!unit) out += "(" + coeff + ")*";
            out += sym;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    Basis basis_;
    std::vector<RatFunQ> c_;
    std::vector<Rat> declared_;
};

struct Infinity {
    friend bool operator==(Infinity, Infinity) { return true; }
};

/// A finite rational point or the point at infinity.
class SingularPoint {
public:
    static SingularPoint finite(Rat x) { return SingularPoint(std::move(x)); }
    static SingularPoint infinity() { return SingularPoint(); }

    bool is_infinity() const noexcept { return std::holds_alternative<Infinity>(v_); }
    const Rat& value() const {
        if (is_infinity()) throw InputError("point at infinity has no finite value");
        return std::get<Rat>(v_);
    }
    std::string to_string() const { return is_infinity() ? "inf" : value().get_str(); }

    friend bool operator==(const SingularPoint& a, const SingularPoint& b) { return a.v_ == b.v_; }
    /// Finite points ascending, infinity last.
    friend bool operator<(const SingularPoint& a, const SingularPoint& b) {
        if (a.is_infinity()) return false;
        if (b.is_infinity()) return true;
        return a.value() < b.value();
    }

private:
    SingularPoint() : v_(Infinity{}) {}
    explicit SingularPoint(Rat x) : v_(std::move(x)) {}

    std::variant<Rat, Infinity> v_;
};

/// Signed Stirling numbers of the first kind s(j, k): z^j D^j = sum_k s(j,k) T^k.
inline std::vector<std::vector<BigInt>> stirling_first(std::size_t n) {
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
    s[0][0] = 1;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= j; ++k)
            s[j][k] = s[j - 1][k - 1] - BigInt(static_cast<long>(j - 1)) * s[j - 1][k];
    return s;
}

/// Stirling numbers of the second kind S(k, j): T^k = sum_j S(k,j) z^j D^j.
inline std::vector<std::vector<BigInt>> stirling_second(std::size_t n) {
    std::vector<std::vector<BigInt>> S(n + 1, std::vector<BigInt>(n + 1, 0));
    S[0][0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t j = 1; j <= k; ++j)
            S[k][j] = BigInt(static_cast<long>(j)) * S[k - 1][j] + S[k - 1][j - 1];
    return S;
}

/// Rewrites an operator in the other basis around z = 0, without normalizing.
inline DiffOp change_basis(const DiffOp& op, Basis target) {
    if (op.basis() == target) return op;
    const std::size_t n = op.order();
    std::vector<RatFunQ> out(n + 1, RatFunQ(0));
    if (target == Basis::Delta) {
        // D^j = z^{-j} sum_k s(j,k) T^k
        const auto s = stirling_first(n);
        for (std::size_t j = 0; j <= n; ++j) {
            if (op.coeff(j).is_zero()) continue;
            const RatFunQ scaled = op.coeff(j) * RatFunQ(PolyQ(1), PolyQ::monomial(Rat(1), j));
            for (std::size_t k = 0; k <= j; ++k)
                if (s[j][k] != 0) out[k] += scaled * RatFunQ(Rat(s[j][k]));
        }
    } else {
        // T^k = sum_j S(k,j) z^j D^j
        const auto S = stirling_second(n);
        for (std::size_t k = 0; k <= n; ++k) {
            if (op.coeff(k).is_zero()) continue;
            for (std::size_t j = 0; j <= k; ++j)
                if (S[k][j] != 0)
                    out[j] += op.coeff(k) * RatFunQ(PolyQ::monomial(Rat(S[k][j]), j));
        }
    }
    DiffOp result(target, std::move(out));
    return result.with_declared_points(op.declared_points());
}

/// Monic form in the d/dz basis.
inline DiffOp to_ddz_monic(const DiffOp& op) { return change_basis(op, Basis::DDZ).monic(); }

/// Substitutes z -> z + shift in every coefficient (d/dz basis only).
inline DiffOp shift_variable(const DiffOp& op, const Rat& shift) {
    if (op.basis() != Basis::DDZ) throw InputError("shift_variable expects the d/dz basis");
    std::vector<RatFunQ> v;
    for (const auto& a : op.coeffs()) v.push_back(a.shifted(shift));
    return DiffOp(Basis::DDZ, std::move(v));
}

/// The operator in the local delta basis at gamma, with gamma moved to 0.
inline DiffOp to_delta_at(const DiffOp& op, const Rat& gamma) {
    if (op.basis() != Basis::DDZ) throw InputError("to_delta_at expects the d/dz basis");
    return change_basis(shift_variable(op, gamma), Basis::Delta);
}

/// z -> 1/z, using T -> -T; result is monic in the d/dz basis.
inline DiffOp invert_variable(const DiffOp& op) {
    const DiffOp delta = change_basis(op, Basis::Delta);
    std::vector<RatFunQ> v;
    for (std::size_t k = 0; k <= delta.order(); ++k) {
        RatFunQ c = delta.coeff(k).inverted();
        v.push_back(k % 2 ? -c : c);
    }
    return to_ddz_monic(DiffOp(Basis::Delta, std::move(v)));
}

using RatFunMatrix = std::vector<std::vector<RatFunQ>>;

/// Companion matrix of the monic d/dz form: superdiagonal ones, last row (-a_n, ..., -a_1).
inline RatFunMatrix companion_matrix(const DiffOp& op) {
    const DiffOp m = to_ddz_monic(op);
    const std::size_t n = m.order();
    RatFunMatrix A(n, std::vector<RatFunQ>(n, RatFunQ(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) A[i][i + 1] = RatFunQ(1);
    // coeff(k) multiplies D^k, so the last-row entry for y^{(k)} is -coeff(k).
    for (std::size_t k = 0; k < n; ++k) A[n - 1][k] = -m.coeff(k);
    return A;
}

}  // namespace frobenize
