#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"
#include "fp.hpp"

namespace frobenize {

/// nF(n-1) series parameters; beta_n = 1 is implicit.
struct HypSeriesSpec {
    std::vector<Rat> alpha;
    std::vector<Rat> beta;

    std::size_t order() const { return alpha.size(); }
    /// Full beta list including the implicit 1, as the operator constructor expects.
    std::vector<Rat> operator_beta() const {
        auto b = beta;
        b.push_back(Rat(1));
        return b;
    }
    std::vector<std::string> warnings() const {
        std::vector<std::string> w;
        if (!differences_avoid_integers(alpha, operator_beta()))
            w.push_back("some alpha_i - beta_j is an integer (reducible monodromy)");
        auto outside = [](const Rat& x) { return x <= 0 || x > 1; };
        for (const auto& a : alpha)
            if (outside(a)) w.push_back("alpha " + a.get_str() + " outside (0, 1]");
        for (const auto& b : beta)
            if (outside(b)) w.push_back("beta " + b.get_str() + " outside (0, 1]");
        return w;
    }
};

/// Exact coefficients a(0..N-1) from a(k+1)/a(k) = prod(alpha_i + k) / (prod(beta_j + k) (k + 1)).
inline std::vector<Rat> hyper_coeffs(const HypSeriesSpec& spec, std::size_t N) {
    if (spec.beta.size() + 1 != spec.alpha.size())
        throw InputError("nF(n-1) needs n alphas and n-1 betas");
    for (const auto& b : spec.beta)
        if (is_integer(b) && b <= 0)
            throw InputError("series undefined: beta " + b.get_str() + " is a nonpositive integer");
    std::vector<Rat> a;
    a.reserve(N);
    if (N == 0) return a;
    a.emplace_back(1);
    for (std::size_t k = 0; k + 1 < N; ++k) {
        const Rat kk(static_cast<long>(k));
        Rat num = 1, den = kk + 1;
        for (const auto& x : spec.alpha) num *= x + kk;
        for (const auto& y : spec.beta) den *= y + kk;
        a.push_back(a.back() * num / den);
    }
    return a;
}

struct IntegralityVerdict {
    bool integral = true;
    /// First index with a negative valuation.
    std::optional<std::size_t> first_offending;
};

inline IntegralityVerdict integrality_check(const std::vector<Rat>& coeffs, Prime p,
                                             std::size_t N = static_cast<std::size_t>(-1)) {
    const std::size_t end = std::min(N, coeffs.size());
    for (std::size_t k = 0; k < end; ++k)
        if (coeffs[k] != 0 && vp(coeffs[k], p) < Valuation::finite(0)) return {false, k};
    return {};
}

inline bool integrality(const std::vector<Rat>& coeffs, Prime p) { return integrality_check(coeffs, p).integral; }

/// Exact power-series solution with f(0) = 1 at z = 0, via the delta-form coefficient recurrence.
/// Free coefficients at resonant indices without obstruction are set to 0.
inline std::vector<Rat> series_from_operator(const DiffOp& op, std::size_t N) {
    const DiffOp ddz = to_ddz_monic(op);
    // Clear denominators in the delta form: sum_k c_k(z) T^k with polynomial c_k.
    const DiffOp delta = change_basis(ddz, Basis::Delta);
    PolyQ common(1);
    for (const auto& c : delta.coeffs()) common = divmod(common * c.den(), gcd(common, c.den())).first;
    std::vector<PolyQ> c;
    std::size_t low = SIZE_MAX;
    for (const auto& x : delta.coeffs()) {
        c.push_back(divmod(x.num() * common, x.den()).first);
        if (!c.back().is_zero()) low = std::min(low, c.back().low_order());
    }
    for (auto& x : c) x = x.is_zero() ? x : x.shift_down(low);
    // P_m(lambda) = sum_k [z^m] c_k(z) lambda^k
    std::size_t maxdeg = 0;
    for (const auto& x : c)
        if (!x.is_zero()) maxdeg = std::max<std::size_t>(maxdeg, static_cast<std::size_t>(x.degree()));
    std::vector<PolyQ> P(maxdeg + 1);
    for (std::size_t m = 0; m <= maxdeg; ++m) {
        std::vector<Rat> v(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) v[k] = c[k].coeff(m);
        P[m] = PolyQ(std::move(v));
    }
    if (P[0].eval(Rat(0)) != 0)
        throw EligibilityError("NO_POWER_SERIES", "0 is not an exponent at z = 0: no power-series solution");

    std::vector<Rat> a;
    a.reserve(N);
    if (N == 0) return a;
    a.emplace_back(1);
    for (std::size_t k = 1; k < N; ++k) {
        Rat rhs = 0;
        for (std::size_t m = 1; m <= maxdeg && m <= k; ++m) {
            if (a[k - m] == 0 || P[m].is_zero()) continue;
            rhs -= a[k - m] * P[m].eval(Rat(static_cast<long>(k - m)));
        }
        const Rat lead = P[0].eval(Rat(static_cast<long>(k)));
        if (lead == 0) {
            if (rhs == 0) {
                a.emplace_back(0);
                continue;
            }
            throw EligibilityError("RESONANCE", "resonant exponent blocks the power-series solution at index " +
                                                    std::to_string(k));
        }
        a.push_back(rhs / lead);
    }
    return a;
}

/// Truncated power series over F_p, coefficients 0..N-1.
class SeriesFp {
public:
    SeriesFp(Prime p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
    }

    Prime prime() const noexcept { return p_; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }
    Residue operator[](std::size_t i) const { return c_[i]; }
    bool is_zero() const {
        for (auto x : c_)
            if (x) return false;
        return true;
    }
    SeriesFp truncated(std::size_t N) const {
        if (N > c_.size()) throw InputError("cannot extend a truncated series");
        return SeriesFp(p_, std::vector<Residue>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(N)));
    }

    friend SeriesFp operator*(const SeriesFp& a, const SeriesFp& b) {
        const std::size_t N = std::min(a.size(), b.size());
        std::vector<std::uint64_t> acc(N, 0);
        for (std::size_t i = 0; i < N; ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; i + j < N; ++j)
                acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.p_;
        }
        return SeriesFp(a.p_, std::vector<Residue>(acc.begin(), acc.end()));
    }
    friend bool operator==(const SeriesFp& a, const SeriesFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
    Prime p_;
    std::vector<Residue> c_;
};

/// Reduces the first N coefficients mod p; throws with the index of a non-integral coefficient.
inline SeriesFp reduce_mod_p(const std::vector<Rat>& coeffs, Prime p, std::size_t N) {
    if (N > coeffs.size()) throw InputError("reduce_mod_p: only " + std::to_string(coeffs.size()) + " coefficients available");
    std::vector<Residue> r(N);
    for (std::size_t k = 0; k < N; ++k) {
        if (mpz_divisible_ui_p(coeffs[k].get_den_mpz_t(), p))
            throw EligibilityError("NOT_INTEGRAL", "coefficient " + std::to_string(k) + " is not " +
                                                       std::to_string(p) + "-integral");
        r[k] = reduce_rat(coeffs[k], p);
    }
    return SeriesFp(p, std::move(r));
}

/// f(z^{p^e}) = f^{p^e} over F_p, truncated to the same length.
inline SeriesFp frobenius_twist(const SeriesFp& f, unsigned e) {
    const std::size_t N = f.size();
    std::vector<Residue> g(N, 0);
    std::uint64_t step = 1;
    for (unsigned i = 0; i < e && step < N; ++i) step *= f.prime();
    for (std::size_t k = 0; k * step < N; ++k) g[k * step] = f[k];
    return SeriesFp(f.prime(), std::move(g));
}

/// Produces the reduced series to a requested precision.
using SeriesSource = std::function<SeriesFp(std::size_t)>;

/// Exact rational series generator with caching, reduced on demand.
class ExactSeries {
public:
    using Generator = std::function<std::vector<Rat>(std::size_t)>;

    explicit ExactSeries(Generator gen) : gen_(std::move(gen)) {}

    const std::vector<Rat>& coeffs(std::size_t N) {
        if (cache_.size() < N) cache_ = gen_(N);
        return cache_;
    }
    IntegralityVerdict integrality(Prime p, std::size_t N) {
        return integrality_check(coeffs(N), p, N);
    }
    SeriesFp reduced(Prime p, std::size_t N) { return reduce_mod_p(coeffs(N), p, N); }
    SeriesSource source(Prime p) {
        return [this, p](std::size_t N) { return reduced(p, N); };
    }

private:
    Generator gen_;
    std::vector<Rat> cache_;
};

}  // namespace frobenize
