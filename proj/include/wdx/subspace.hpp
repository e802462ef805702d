#pragma once

#include "wdx/matrix.hpp"

#include <stdexcept>

namespace wdx {

/**
 * A subspace of F^n stored as the reduced row echelon basis of its span,
 * so subspace equality is matrix equality.
 */
template <typename F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace full(std::size_t ambient) { return span(Matrix<F>::identity(ambient)); }

    /** Span of the rows of `vectors`. */
    static Subspace span(Matrix<F> vectors) {
        Subspace s(vectors.cols());
        auto pivots = vectors.rref_in_place();
        Matrix<F> b(pivots.size(), vectors.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < vectors.cols(); ++j) b(i, j) = vectors(i, j);
        s.basis_ = std::move(b);
        return s;
    }

    static Subspace span_vectors(std::size_t ambient, const std::vector<std::vector<F>>& vecs) {
        Matrix<F> m(vecs.size(), ambient);
        for (std::size_t i = 0; i < vecs.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vecs[i][j];
        return span(std::move(m));
    }

    /** Kernel of M acting on column vectors, as a subspace of F^{cols}. */
    static Subspace kernel(const Matrix<F>& m) {
        auto vecs = m.kernel_basis();
        return span_vectors(m.cols(), vecs);
    }

    /** Column space of M, as a subspace of F^{rows}. */
    static Subspace image(const Matrix<F>& m) { return span(m.transpose()); }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<F>& v) const {
        // reduce v against the echelon basis
        std::vector<F> w = v;
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            std::size_t p = pivot_col(r);
            if (!field_is_zero(w[p])) {
                F f = w[p];
                for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(r, j);
            }
        }
        for (auto& x : w)
            if (!field_is_zero(x)) return false;
        return true;
    }

    bool contains(const Subspace& o) const {
        check_ambient(o);
        for (std::size_t r = 0; r < o.basis_.rows(); ++r)
            if (!contains(o.basis_.row(r))) return false;
        return true;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        a.check_ambient(b);
        Matrix<F> m(a.dim() + b.dim(), a.ambient_);
        m.set_block(0, 0, a.basis_);
        m.set_block(a.dim(), 0, b.basis_);
        return span(std::move(m));
    }

    /** Intersection via the kernel of the stacked-coefficients map. */
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        a.check_ambient(b);
        if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
        // x = u^T A = v^T B; solve [A^T | -B^T] (u,v)^T = 0.
        Matrix<F> m(a.ambient_, a.dim() + b.dim());
        for (std::size_t i = 0; i < a.ambient_; ++i) {
            for (std::size_t r = 0; r < a.dim(); ++r) m(i, r) = a.basis_(r, i);
            for (std::size_t r = 0; r < b.dim(); ++r) m(i, a.dim() + r) = -b.basis_(r, i);
        }
        auto ker = m.kernel_basis();
        Matrix<F> vecs(ker.size(), a.ambient_);
        for (std::size_t k = 0; k < ker.size(); ++k)
            for (std::size_t j = 0; j < a.ambient_; ++j) {
                F x(0);
                for (std::size_t r = 0; r < a.dim(); ++r) x += ker[k][r] * a.basis_(r, j);
                vecs(k, j) = x;
            }
        return span(std::move(vecs));
    }

    /** Image of this subspace under M (matrix acting on column vectors). */
    Subspace apply(const Matrix<F>& m) const {
        if (m.cols() != ambient_) throw std::invalid_argument("ambient mismatch in Subspace::apply");
        Matrix<F> vecs(dim(), m.rows());
        for (std::size_t r = 0; r < dim(); ++r) {
            auto img = m.apply(basis_.row(r));
            for (std::size_t j = 0; j < m.rows(); ++j) vecs(r, j) = img[j];
        }
        return span(std::move(vecs));
    }

private:
    std::size_t ambient_;
    Matrix<F> basis_;  // RREF, rows are basis vectors

    std::size_t pivot_col(std::size_t r) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!field_is_zero(basis_(r, j))) return j;
        throw std::logic_error("zero row in echelon basis");
    }
    void check_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("ambient mismatch between subspaces");
    }
};

template <typename F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
    return intersect(a, b);
}

using QSubspace = Subspace<Rational>;

}  // namespace wdx
