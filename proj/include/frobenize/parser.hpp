#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffop.hpp"

namespace frobenize {

namespace detail {

/// Intermediate value: coefficient of d^k at index k. Size <= 1 means a plain coefficient.
struct OpValue {
    std::vector<RatFunQ> c;

    bool is_scalar() const { return c.size() <= 1; }
    RatFunQ scalar() const { return c.empty() ? RatFunQ(0) : c[0]; }
    bool constant_coefficients() const {
        for (const auto& x : c)
            if (!x.is_constant()) return false;
        return true;
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

inline OpValue add(OpValue a, const OpValue& b, bool subtract) {
    if (b.c.size() > a.c.size()) a.c.resize(b.c.size(), RatFunQ(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] = subtract ? a.c[i] - b.c[i] : a.c[i] + b.c[i];
    a.trim();
    return a;
}

inline OpValue compose_constant(const OpValue& a, const OpValue& b) {
    // Valid when b has constant coefficients: they commute with every derivative.
    if (a.c.empty() || b.c.empty()) return {};
    OpValue r;
    r.c.assign(a.c.size() + b.c.size() - 1, RatFunQ(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

class OperatorParser {
public:
    explicit OperatorParser(std::string_view text) : s_(text) {}

    DiffOp parse() {
        OpValue v = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        v.trim();
        if (v.c.empty()) throw ParseError("operator is identically zero", 0);
        if (v.c.size() < 2) throw ParseError("operator has no derivative term (order 0)", 0);
        return DiffOp(basis_.value_or(Basis::DDZ), std::move(v.c));
    }

    RatFunQ parse_scalar() {
        OpValue v = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        v.trim();
        if (v.c.size() > 1) throw ParseError("expected a rational function of z, found an operator", 0);
        return v.scalar();
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char ch) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    OpValue expr() {
        OpValue acc;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        acc = term();
        if (negate) acc = add(OpValue{}, acc, true);
        for (;;) {
            if (accept('+'))
                acc = add(std::move(acc), term(), false);
            else if (accept('-'))
                acc = add(std::move(acc), term(), true);
            else
                return acc;
        }
    }

    OpValue term() {
        OpValue acc = factor();
        for (;;) {
            const std::size_t at = pos_;
            if (accept('*')) {
                OpValue rhs = factor();
                if (acc.is_scalar()) {
                    for (auto& x : rhs.c) x = acc.scalar() * x;
                    rhs.trim();
                    acc = std::move(rhs);
                } else if (rhs.constant_coefficients()) {
                    acc = compose_constant(acc, rhs);
                } else {
                    pos_ = at;
                    fail("coefficients must be written to the left of derivatives");
                }
            } else if (accept('/')) {
                OpValue rhs = factor();
                if (!rhs.is_scalar()) {
                    pos_ = at;
                    fail("cannot divide by a differential operator");
                }
                if (rhs.scalar().is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                for (auto& x : acc.c) x = x / rhs.scalar();
            } else {
                return acc;
            }
        }
    }

    long integer_exponent() {
        skip_ws();
        bool neg = false;
        bool paren = accept('(');
        if (accept('-')) neg = true;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (paren && !accept(')')) fail("expected ')'");
        return neg ? -e : e;
    }

    OpValue factor() {
        if (accept('-')) {
            OpValue v = factor();
            return add(OpValue{}, v, true);
        }
        OpValue base = primary();
        if (accept('^')) {
            const std::size_t at = pos_;
            const long e = integer_exponent();
            if (base.is_scalar()) {
                if (base.scalar().is_zero() && e < 0) {
                    pos_ = at;
                    fail("zero raised to a negative power");
                }
                return OpValue{{base.scalar().pow(static_cast<int>(e))}};
            }
            if (e < 0 || !base.constant_coefficients()) {
                pos_ = at;
                fail("derivative powers must be non-negative integers");
            }
            OpValue r{{RatFunQ(1)}};
            for (long i = 0; i < e; ++i) r = compose_constant(r, base);
            return r;
        }
        return base;
    }

    OpValue primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            OpValue v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return OpValue{{RatFunQ(Rat(BigInt(std::string(s_.substr(start, pos_ - start)))))}};
        }
        if (ch == 'z') {
            ++pos_;
            return OpValue{{RatFunQ::z()}};
        }
        if (ch == 'D' || ch == 'T') {
            const Basis b = ch == 'D' ? Basis::DDZ : Basis::Delta;
            if (basis_ && *basis_ != b) fail("mixing D and T in one expression");
            basis_ = b;
            ++pos_;
            return OpValue{{RatFunQ(0), RatFunQ(1)}};
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::optional<Basis> basis_;
};

}  // namespace detail

/// Parses an operator expression in D (= d/dz) or T (= z d/dz).
inline DiffOp parse_operator(std::string_view text) { return detail::OperatorParser(text).parse(); }

/// Parses a rational function of z with the operator grammar (no D or T).
inline RatFunQ parse_rational_function(std::string_view text) {
    return detail::OperatorParser(text).parse_scalar();
}

}  // namespace frobenize
