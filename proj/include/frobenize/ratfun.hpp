#pragma once

#include <string>
#include <utility>

#include "poly.hpp"

namespace frobenize {

/// Rational function num/den over Q, stored reduced with monic denominator.
class RatFunQ {
public:
    RatFunQ() : num_(), den_(1) {}
    RatFunQ(const Rat& c) : num_(c), den_(1) {}
    RatFunQ(long c) : num_(c), den_(1) {}
    RatFunQ(PolyQ p) : num_(std::move(p)), den_(1) {}
    RatFunQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunQ z() { return RatFunQ(PolyQ::z()); }

    const PolyQ& num() const noexcept { return num_; }
    const PolyQ& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    bool is_constant() const noexcept { return is_polynomial() && num_.is_constant(); }
    Rat constant_value() const { return num_.coeff(0); }

    /// Order of the pole at x (0 when regular there).
    std::size_t pole_order(const Rat& x) const {
        PolyQ d = den_.shifted(x);
        return d.low_order();
    }
    bool regular_at(const Rat& x) const { return den_.eval(x) != 0; }
    Rat eval(const Rat& x) const {
        const Rat d = den_.eval(x);
        if (d == 0) throw InputError("rational function has a pole at " + x.get_str());
        return num_.eval(x) / d;
    }

    RatFunQ shifted(const Rat& s) const { return RatFunQ(num_.shifted(s), den_.shifted(s)); }

    /// f(1/z).
    RatFunQ inverted() const {
        if (is_zero()) return *this;
        const long dn = num_.degree();
        const long dd = den_.degree();
        PolyQ n = num_.reversed(static_cast<std::size_t>(dn));
        PolyQ d = den_.reversed(static_cast<std::size_t>(dd));
        if (dd >= dn)
            n = n * PolyQ::monomial(Rat(1), static_cast<std::size_t>(dd - dn));
        else
            d = d * PolyQ::monomial(Rat(1), static_cast<std::size_t>(dn - dd));
        return RatFunQ(std::move(n), std::move(d));
    }

    RatFunQ derivative() const {
        return RatFunQ(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunQ pow(int e) const {
        if (e < 0) return RatFunQ(1) / pow(-e);
        return RatFunQ(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    RatFunQ& operator+=(const RatFunQ& o) { return *this = *this + o; }
    RatFunQ& operator-=(const RatFunQ& o) { return *this = *this - o; }
    RatFunQ& operator*=(const RatFunQ& o) { return *this = *this * o; }

    friend RatFunQ operator+(const RatFunQ& a, const RatFunQ& b) {
        if (a.den_ == b.den_) return RatFunQ(a.num_ + b.num_, a.den_);
        return RatFunQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunQ operator-(const RatFunQ& a) {
        RatFunQ r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunQ operator-(const RatFunQ& a, const RatFunQ& b) { return a + (-b); }
    friend RatFunQ operator*(const RatFunQ& a, const RatFunQ& b) {
        return RatFunQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunQ operator/(const RatFunQ& a, const RatFunQ& b) {
        if (b.is_zero()) throw InputError("rational function division by zero");
        return RatFunQ(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunQ& a, const RatFunQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunQ& a, const RatFunQ& b) { return !(a == b); }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        auto wrap = [](const PolyQ& p) {
            std::string s = p.to_string();
            const bool atomic = p.is_constant() || (p.coeffs().size() == 2 && p.coeff(0) == 0 &&
                                                   p.coeff(1) == 1);
            return atomic ? s : "(" + s + ")";
        };
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    void normalize() {
        if (den_.is_zero()) throw InputError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = PolyQ(1);
            return;
        }
        PolyQ g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rat lc = den_.leading();
        if (lc != 1) {
            num_ = num_ * (Rat(1) / lc);
            den_ = den_.monic();
        }
    }

    PolyQ num_;
    PolyQ den_;
};

/// v such that the Gauss norm |f| equals p^{-v}: content valuation of num minus that of den.
inline long gauss_valuation(const RatFunQ& f, Prime p) {
    if (!is_prime(p)) throw InputError("gauss_valuation: " + std::to_string(p) + " is not prime");
    if (f.is_zero()) throw InputError("gauss_valuation of the zero function");
    return f.num().content_valuation(p).value() - f.den().content_valuation(p).value();
}

}  // namespace frobenize
