#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace frobenize {

/// Dense univariate polynomial over Q; coefficient i multiplies z^i.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(const Rat& c) : c_{c} { trim(); }
    PolyQ(long c) : c_{Rat(c)} { trim(); }
    PolyQ(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyQ z() { return PolyQ({Rat(0), Rat(1)}); }
    static PolyQ monomial(const Rat& c, std::size_t k) {
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = c;
        return PolyQ(std::move(v));
    }
    /// The linear factor (z - root).
    static PolyQ linear(const Rat& root) { return PolyQ({-root, Rat(1)}); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    const std::vector<Rat>& coeffs() const noexcept { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const { return c_.back(); }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    PolyQ monic() const {
        if (is_zero()) return *this;
        PolyQ out = *this;
        const Rat lc = leading();
        for (auto& x : out.c_) x /= lc;
        return out;
    }

    PolyQ derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return PolyQ(std::move(d));
    }

    /// p(z + shift), via Horner composition.
    PolyQ shifted(const Rat& shift) const {
        PolyQ acc;
        const PolyQ lin({shift, Rat(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + PolyQ(*it);
        return acc;
    }

    /// z^deg * p(1/z) for a given deg >= degree().
    PolyQ reversed(std::size_t deg) const {
        std::vector<Rat> v(deg + 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[deg - i] = c_[i];
        return PolyQ(std::move(v));
    }

    /// Multiplicity of z as a factor.
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        return k;
    }

    /// Divides by z^k (requires exact divisibility).
    PolyQ shift_down(std::size_t k) const {
        if (k > low_order() && !is_zero()) throw InputError("shift_down: not divisible by z^k");
        if (k >= c_.size()) return {};
        return PolyQ(std::vector<Rat>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    Valuation content_valuation(Prime p) const {
        Valuation v = Valuation::infinity();
        for (const auto& x : c_) {
            auto w = vp(x, p);
            if (w < v) v = w;
        }
        return v;
    }

    PolyQ& operator+=(const PolyQ& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    PolyQ& operator-=(const PolyQ& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator-(PolyQ a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return PolyQ(std::move(r));
    }
    friend PolyQ operator*(PolyQ a, const Rat& s) {
        if (s == 0) return {};
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    /// Euclidean division: returns (q, r) with a = q*b + r, deg r < deg b.
    friend std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
        if (b.is_zero()) throw InputError("polynomial division by zero");
        if (a.degree() < b.degree()) return {PolyQ{}, a};
        std::vector<Rat> rem = a.c_;
        std::vector<Rat> q(a.c_.size() - b.c_.size() + 1, Rat(0));
        const Rat lb = b.leading();
        for (std::size_t k = q.size(); k-- > 0;) {
            const Rat t = rem[k + b.c_.size() - 1] / lb;
            q[k] = t;
            if (t == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= t * b.c_[j];
        }
        rem.resize(b.c_.size() - 1);
        return {PolyQ(std::move(q)), PolyQ(std::move(rem))};
    }

    PolyQ pow(unsigned e) const {
        PolyQ r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rat& a = c_[i];
            if (a == 0) continue;
            Rat mag = abs(a);
            if (out.empty())
                out += a < 0 ? "-" : "";
            else
                out += a < 0 ? " - " : " + ";
            const bool unit = (mag == 1);
            if (i == 0 || !unit) out += mag.get_str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace frobenize
