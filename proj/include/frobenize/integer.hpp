#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace frobenize {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Primes are restricted to machine words below 2^31.
using Prime = std::uint32_t;

inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline Prime require_prime(std::int64_t p) {
    if (p < 2 || static_cast<std::uint64_t>(p) >= kMaxPrime || !is_prime(static_cast<std::uint64_t>(p)))
        throw InputError("expected a prime below 2^31, got " + std::to_string(p));
    return static_cast<Prime>(p);
}

inline std::vector<Prime> primes_up_to(std::int64_t bound) {
    std::vector<Prime> out;
    for (std::int64_t n = 2; n <= bound; ++n)
        if (is_prime(static_cast<std::uint64_t>(n))) out.push_back(static_cast<Prime>(n));
    return out;
}

/// p-adic valuation with an explicit infinite state for zero.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation finite(long v) { return Valuation(v); }

    bool is_infinite() const noexcept { return infinite_; }
    long value() const {
        if (infinite_) throw InputError("valuation of zero is infinite");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ + b.value_);
    }

    std::string to_string() const { return infinite_ ? "+inf" : std::to_string(value_); }

private:
    Valuation() = default;
    explicit Valuation(long v) : infinite_(false), value_(v) {}

    bool infinite_ = true;
    long value_ = 0;
};

inline long vp_int(const BigInt& n, Prime p) {
    // n != 0
    BigInt m = abs(n);
    long v = 0;
    BigInt q, r;
    const BigInt bp(static_cast<unsigned long>(p));
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), bp.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

inline Valuation vp(const Rat& x, Prime p) {
    if (!is_prime(p)) throw InputError("vp: " + std::to_string(p) + " is not prime");
    if (x == 0) return Valuation::infinity();
    return Valuation::finite(vp_int(x.get_num(), p) - vp_int(x.get_den(), p));
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

inline std::uint64_t euler_phi(std::uint64_t d) {
    if (d == 0) throw InputError("euler_phi: argument must be positive");
    std::uint64_t result = d;
    for (std::uint64_t q = 2; q * q <= d; ++q) {
        if (d % q == 0) {
            while (d % q == 0) d /= q;
            result -= result / q;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

/// Smallest h >= 1 with p^h = 1 (mod d).
inline std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d) {
    if (d == 0) throw InputError("multiplicative_order: modulus must be positive");
    if (d == 1) return 1;
    if (std::gcd(p, d) != 1)
        throw InputError("multiplicative_order: gcd(" + std::to_string(p) + ", " + std::to_string(d) +
                         ") != 1");
    // The order divides phi(d); scan its divisors in increasing order.
    const std::uint64_t phi = euler_phi(d);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t k = 1; k * k <= phi; ++k) {
        if (phi % k == 0) {
            divisors.push_back(k);
            if (k != phi / k) divisors.push_back(phi / k);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    for (auto k : divisors)
        if (powmod(p, k, d) == 1) return k;
    return phi;  // unreachable by Euler's theorem
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::uint64_t to_u64(const BigInt& n) {
    if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw InputError("integer " + n.get_str() + " does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

inline BigInt from_u64(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt pow_big(std::uint64_t base, std::uint64_t exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// Representative of x mod 1 in [0, 1).
inline Rat frac_part(const Rat& x) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rat(fl);
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline std::string to_string(const Rat& x) { return x.get_str(); }

/// Parses "a" or "a/b" with optional sign into a canonical rational.
inline Rat parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    auto valid_int = [](std::string_view t) {
        std::size_t i = 0;
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw InputError("malformed rational '" + std::string(text) + "'");
    BigInt n(num), d(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::vector<Rat> parse_rational_list(std::string_view text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
        if (!piece.empty()) out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace detail {

inline BigInt pollard_rho(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto f = [&](const BigInt& v) {
            BigInt r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            BigInt diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

inline void factor_into(BigInt n, std::vector<BigInt>& primes) {
    if (n == 1) return;
    for (unsigned long q = 2; q < 10000; ++q) {
        if (BigInt(q) * q > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            primes.emplace_back(q);
            n /= q;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        primes.push_back(n);
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace detail

/// Positive divisors of |n| (n != 0), ascending.
inline std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> primes;
    detail::factor_into(abs(n), primes);
    std::sort(primes.begin(), primes.end());
    std::vector<BigInt> divs{1};
    std::size_t i = 0;
    while (i < primes.size()) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        const std::size_t count = divs.size();
        BigInt power = 1;
        for (std::size_t e = i; e < j; ++e) {
            power *= primes[i];
            for (std::size_t k = 0; k < count; ++k) divs.push_back(divs[k] * power);
        }
        i = j;
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace frobenize
