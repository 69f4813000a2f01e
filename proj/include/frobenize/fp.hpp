#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace frobenize {

using Residue = std::uint32_t;

// Prime-field scalar helpers. All residues live in [0, p).

inline Residue fp_add(Residue a, Residue b, Prime p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p ? s - p : s);
}
inline Residue fp_sub(Residue a, Residue b, Prime p) {
    return static_cast<Residue>(a >= b ? a - b : std::uint64_t{a} + p - b);
}
inline Residue fp_neg(Residue a, Prime p) { return a == 0 ? 0 : p - a; }
inline Residue fp_mul(Residue a, Residue b, Prime p) {
    return static_cast<Residue>((std::uint64_t{a} * b) % p);
}
inline Residue fp_pow(Residue a, std::uint64_t e, Prime p) {
    return static_cast<Residue>(powmod(a, e, p));
}
inline Residue fp_inv(Residue a, Prime p) {
    if (a == 0) throw InputError("inverse of zero in F_" + std::to_string(p));
    return fp_pow(a, p - 2, p);
}

/// Image of a p-integral rational in F_p.
inline Residue reduce_rat(const Rat& x, Prime p) {
    const unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
    if (den == 0) throw InputError("reduce_rat: " + x.get_str() + " is not " + std::to_string(p) + "-integral");
    const unsigned long num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
    return fp_mul(static_cast<Residue>(num), fp_inv(static_cast<Residue>(den), p), p);
}

/// Polynomial over F_p, coefficient i multiplies z^i.
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(Prime p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
        trim();
    }

    Prime prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }
    Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Residue leading() const { return c_.back(); }

    FpPoly scaled(Residue s) const {
        std::vector<Residue> v = c_;
        for (auto& x : v) x = fp_mul(x, s, p_);
        return FpPoly(p_, std::move(v));
    }
    FpPoly monic() const { return is_zero() ? *this : scaled(fp_inv(leading(), p_)); }

    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
        std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.p_;
        return FpPoly(a.p_, std::vector<Residue>(acc.begin(), acc.end()));
    }
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
            if (i > 0) {
                if (c_[i] != 1) out += "*";
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

    Prime p_ = 2;
    std::vector<Residue> c_;
};

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix(Prime p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    FpMatrix(Prime p, const std::vector<std::vector<Residue>>& rows)
        : FpMatrix(p, rows.size(), rows.empty() ? 0 : rows.front().size()) {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (rows[i].size() != cols_) throw InputError("FpMatrix: ragged rows");
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) = rows[i][j] % p_;
        }
    }

    static FpMatrix identity(Prime p, std::size_t n) {
        FpMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Prime prime() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Residue& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Residue at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Residue> apply(const std::vector<Residue>& v) const {
        std::vector<Residue> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t{at(i, j)} * v[j]) % p_;
            out[i] = static_cast<Residue>(acc);
        }
        return out;
    }

    /// In-place reduced row echelon form; returns pivot columns in row order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && at(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t k = c; k < cols_; ++k) std::swap(at(piv, k), at(r, k));
            const Residue inv = fp_inv(at(r, c), p_);
            Residue* prow = &a_[r * cols_];
            for (std::size_t k = c; k < cols_; ++k) prow[k] = fp_mul(prow[k], inv, p_);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                Residue* row = &a_[i * cols_];
                const Residue f = row[c];
                if (f == 0) continue;
                const std::uint64_t neg = p_ - f;
                for (std::size_t k = c; k < cols_; ++k)
                    if (prow[k]) row[k] = static_cast<Residue>((row[k] + neg * prow[k]) % p_);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> a_;
};

/// Basis of the right kernel {v : Mv = 0}, one vector per free column.
inline std::vector<std::vector<Residue>> fp_kernel(FpMatrix m) {
    const Prime p = m.prime();
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Residue>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Residue> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = fp_neg(m.at(r, f), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t fp_rank(FpMatrix m) { return m.rref().size(); }

}  // namespace frobenize
