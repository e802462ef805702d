#pragma once

#include "wdx/field.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace wdx {

/**
 * Dense matrix over an exact field. Everything downstream relies on exact
 * equality, so there is no floating point anywhere.
 */
template <typename F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const F& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
        return r;
    }
    friend Matrix operator*(const F& s, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v *= s;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        assert(x.cols_ == y.rows_);
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const F& xik = x(i, k);
                if (field_is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const F& ykj = y(k, j);
                    if (!field_is_zero(ykj)) r(i, j) += xik * ykj;
                }
            }
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (!(x.a_[i] == y.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_zero() const {
        for (auto& v : a_)
            if (!field_is_zero(v)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix negate() const {
        Matrix r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        assert(v.size() == cols_);
        std::vector<F> r(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix pow(unsigned k) const {
        assert(rows_ == cols_);
        Matrix acc = identity(rows_), b = *this;
        while (k) {
            if (k & 1) acc = acc * b;
            if (k >>= 1) b = b * b;
        }
        return acc;
    }

    /** In-place row reduction to reduced row echelon form; returns pivot columns. */
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && field_is_zero((*this)(sel, c))) ++sel;
            if (sel == rows_) continue;
            swap_rows(sel, r);
            F inv = F(1) / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || field_is_zero((*this)(i, c))) continue;
                F f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref_in_place().size();
    }

    /** Basis of the kernel, one column vector per free variable. */
    std::vector<std::vector<F>> kernel_basis() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots = m.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<F>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<F> v(cols_, F(0));
            v[fc] = F(1);
            for (std::size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m(pi, fc);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::size_t nullity() const { return cols_ - rank(); }

    /** One solution of Mx = b if b lies in the column space. */
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        assert(b.size() == rows_);
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        std::vector<std::size_t> pivots = aug.rref_in_place();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<F> x(cols_, F(0));
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug(pi, cols_);
        return x;
    }

    std::optional<Matrix> inverse() const {
        assert(rows_ == cols_);
        if (rows_ == 0) return Matrix(0, 0);
        Matrix aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = F(1);
        }
        auto pivots = aug.rref_in_place();
        if (pivots.size() != rows_ || pivots.back() != rows_ - 1) return std::nullopt;
        Matrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    bool is_nilpotent() const {
        assert(rows_ == cols_);
        return pow((unsigned)rows_).is_zero();
    }

    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix r(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    std::vector<F> row(std::size_t i) const {
        std::vector<F> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
    }
};

using QMatrix = Matrix<Rational>;

/** exp(s*M) for nilpotent M; exact because the series terminates. */
template <typename F>
Matrix<F> exp_nilpotent(const Matrix<F>& m, const F& s) {
    assert(m.rows() == m.cols());
    Matrix<F> acc = Matrix<F>::identity(m.rows());
    Matrix<F> power = Matrix<F>::identity(m.rows());
    F coeff(1);
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        power = power * m;
        if (power.is_zero()) break;
        coeff *= s / F((long long)k);
        acc = acc + coeff * power;
    }
    return acc;
}

/** log(U) for unipotent U; exact because the series terminates. */
template <typename F>
Matrix<F> log_unipotent(const Matrix<F>& u) {
    assert(u.rows() == u.cols());
    Matrix<F> n = u - Matrix<F>::identity(u.rows());
    Matrix<F> acc(u.rows(), u.rows());
    Matrix<F> power = Matrix<F>::identity(u.rows());
    F sign(1);
    for (std::size_t k = 1; k <= u.rows(); ++k) {
        power = power * n;
        if (power.is_zero()) break;
        acc = acc + (sign / F((long long)k)) * power;
        sign = -sign;
    }
    return acc;
}

}  // namespace wdx
