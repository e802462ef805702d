#pragma once

#include "wdx/homalg/algebra.hpp"
#include "wdx/matrix.hpp"
#include "wdx/subspace.hpp"

#include <numeric>

namespace wdx::homalg {

using wdx::Matrix;
using wdx::Subspace;

/**
 * A finite-dimensional representation of the quiver: one space per vertex,
 * one matrix per arrow, relations acting as zero.
 */
template <typename F>
class AModule {
public:
    AModule() = default;
    AModule(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix<F>> arrow_maps, bool check = true)
        : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {
        if ((int)dims_.size() != alg_->vertices()) throw std::invalid_argument("dimension vector has wrong length");
        if (maps_.size() != alg_->arrows().size()) throw std::invalid_argument("one matrix per arrow required");
        for (std::size_t a = 0; a < maps_.size(); ++a) {
            const Arrow& ar = alg_->arrows()[a];
            if (maps_[a].rows() != (std::size_t)dims_[ar.tgt] || maps_[a].cols() != (std::size_t)dims_[ar.src])
                throw std::invalid_argument("arrow matrix shape mismatch");
        }
        if (check) {
            for (auto& rel : alg_->relations())
                if (!path_action(rel).is_zero()) throw std::invalid_argument("a relation acts nonzero on the module");
        }
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t(0)); }
    const Matrix<F>& arrow_map(int a) const { return maps_[a]; }

    bool is_zero() const { return total_dim() == 0; }

    /** Action of an explicit arrow sequence (composable, left to right). */
    Matrix<F> path_action(const std::vector<int>& seq) const {
        if (seq.empty()) throw std::invalid_argument("path_action needs a nonempty sequence");
        Matrix<F> m = maps_[seq[0]];
        for (std::size_t i = 1; i < seq.size(); ++i) m = maps_[seq[i]] * m;
        return m;
    }
    /** Action of a stored nonzero path from v (index into algebra()->paths_from(v)). */
    Matrix<F> path_action(int v, std::size_t path_idx) const {
        const auto& seq = alg_->paths_from(v)[path_idx];
        if (seq.empty()) return Matrix<F>::identity((std::size_t)dims_[v]);
        return path_action(seq);
    }

    /** Offset of vertex v inside the total coordinate vector. */
    std::size_t vertex_offset(int v) const {
        std::size_t off = 0;
        for (int w = 0; w < v; ++w) off += (std::size_t)dims_[w];
        return off;
    }

    bool operator==(const AModule& o) const { return dims_ == o.dims_ && maps_ == o.maps_; }

private:
    AlgebraPtr alg_;
    std::vector<int> dims_;
    std::vector<Matrix<F>> maps_;
};

/** Morphism of representations: vertexwise matrices commuting with the arrows. */
template <typename F>
class Morphism {
public:
    Morphism() = default;
    Morphism(AModule<F> src, AModule<F> tgt, std::vector<Matrix<F>> comps, bool check = true)
        : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps)) {
        if ((int)comps_.size() != src_.algebra()->vertices()) throw std::invalid_argument("one component per vertex");
        for (int v = 0; v < src_.algebra()->vertices(); ++v)
            if (comps_[v].rows() != (std::size_t)tgt_.dim(v) || comps_[v].cols() != (std::size_t)src_.dim(v))
                throw std::invalid_argument("morphism component shape mismatch");
        if (check && !commutes()) throw std::invalid_argument("matrices do not commute with the arrows");
    }

    static Morphism zero(const AModule<F>& src, const AModule<F>& tgt) {
        std::vector<Matrix<F>> comps;
        for (int v = 0; v < src.algebra()->vertices(); ++v)
            comps.push_back(Matrix<F>((std::size_t)tgt.dim(v), (std::size_t)src.dim(v)));
        return Morphism(src, tgt, std::move(comps), false);
    }
    static Morphism identity(const AModule<F>& m) {
        std::vector<Matrix<F>> comps;
        for (int v = 0; v < m.algebra()->vertices(); ++v) comps.push_back(Matrix<F>::identity((std::size_t)m.dim(v)));
        return Morphism(m, m, std::move(comps), false);
    }

    const AModule<F>& source() const { return src_; }
    const AModule<F>& target() const { return tgt_; }
    const Matrix<F>& at(int v) const { return comps_[v]; }

    bool commutes() const {
        for (std::size_t a = 0; a < src_.algebra()->arrows().size(); ++a) {
            const Arrow& ar = src_.algebra()->arrows()[a];
            if (!(comps_[ar.tgt] * src_.arrow_map((int)a) == tgt_.arrow_map((int)a) * comps_[ar.src])) return false;
        }
        return true;
    }

    bool is_zero() const {
        for (auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend Morphism operator*(const Morphism& g, const Morphism& f) {  // g after f
        std::vector<Matrix<F>> comps;
        for (int v = 0; v < f.src_.algebra()->vertices(); ++v) comps.push_back(g.comps_[v] * f.comps_[v]);
        return Morphism(f.src_, g.tgt_, std::move(comps), false);
    }
    friend Morphism operator+(const Morphism& f, const Morphism& g) {
        std::vector<Matrix<F>> comps;
        for (int v = 0; v < f.src_.algebra()->vertices(); ++v) comps.push_back(f.comps_[v] + g.comps_[v]);
        return Morphism(f.src_, f.tgt_, std::move(comps), false);
    }
    friend Morphism operator-(const Morphism& f, const Morphism& g) {
        std::vector<Matrix<F>> comps;
        for (int v = 0; v < f.src_.algebra()->vertices(); ++v) comps.push_back(f.comps_[v] - g.comps_[v]);
        return Morphism(f.src_, f.tgt_, std::move(comps), false);
    }
    friend Morphism operator*(const F& s, const Morphism& f) {
        std::vector<Matrix<F>> comps;
        for (auto& c : f.comps_) comps.push_back(s * c);
        return Morphism(f.src_, f.tgt_, std::move(comps), false);
    }
    bool operator==(const Morphism& o) const { return comps_ == o.comps_; }

private:
    AModule<F> src_, tgt_;
    std::vector<Matrix<F>> comps_;
};

// ---------------------------------------------------------------------------
// basic constructions

template <typename F>
AModule<F> zero_module(const AlgebraPtr& alg) {
    std::vector<int> dims(alg->vertices(), 0);
    std::vector<Matrix<F>> maps(alg->arrows().size(), Matrix<F>(0, 0));
    return AModule<F>(alg, std::move(dims), std::move(maps), false);
}

template <typename F>
AModule<F> simple_module(const AlgebraPtr& alg, int v) {
    std::vector<int> dims(alg->vertices(), 0);
    dims[v] = 1;
    std::vector<Matrix<F>> maps;
    for (auto& a : alg->arrows()) maps.push_back(Matrix<F>((std::size_t)dims[a.tgt], (std::size_t)dims[a.src]));
    return AModule<F>(alg, std::move(dims), std::move(maps), false);
}

template <typename F>
std::pair<AModule<F>, std::pair<Morphism<F>, Morphism<F>>> direct_sum_with_maps(const AModule<F>& a,
                                                                                const AModule<F>& b) {
    const AlgebraPtr& alg = a.algebra();
    std::vector<int> dims(alg->vertices());
    for (int v = 0; v < alg->vertices(); ++v) dims[v] = a.dim(v) + b.dim(v);
    std::vector<Matrix<F>> maps;
    for (std::size_t i = 0; i < alg->arrows().size(); ++i) {
        const Arrow& ar = alg->arrows()[i];
        Matrix<F> m((std::size_t)dims[ar.tgt], (std::size_t)dims[ar.src]);
        m.set_block(0, 0, a.arrow_map((int)i));
        m.set_block((std::size_t)a.dim(ar.tgt), (std::size_t)a.dim(ar.src), b.arrow_map((int)i));
        maps.push_back(std::move(m));
    }
    AModule<F> sum(alg, dims, std::move(maps), false);
    std::vector<Matrix<F>> ia, ib;
    for (int v = 0; v < alg->vertices(); ++v) {
        Matrix<F> mi((std::size_t)dims[v], (std::size_t)a.dim(v));
        for (int i = 0; i < a.dim(v); ++i) mi(i, i) = F(1);
        ia.push_back(std::move(mi));
        Matrix<F> mj((std::size_t)dims[v], (std::size_t)b.dim(v));
        for (int j = 0; j < b.dim(v); ++j) mj(a.dim(v) + j, j) = F(1);
        ib.push_back(std::move(mj));
    }
    Morphism<F> inc_a(a, sum, std::move(ia), false), inc_b(b, sum, std::move(ib), false);
    return {sum, {inc_a, inc_b}};
}

template <typename F>
AModule<F> direct_sum(const AModule<F>& a, const AModule<F>& b) {
    return direct_sum_with_maps(a, b).first;
}

/** Kernel as a subrepresentation, with its inclusion. */
template <typename F>
std::pair<AModule<F>, Morphism<F>> kernel_with_inclusion(const Morphism<F>& f) {
    const AlgebraPtr& alg = f.source().algebra();
    std::vector<Subspace<F>> ker(alg->vertices(), Subspace<F>(0));
    std::vector<int> dims(alg->vertices());
    for (int v = 0; v < alg->vertices(); ++v) {
        ker[v] = Subspace<F>::kernel(f.at(v));
        dims[v] = (int)ker[v].dim();
    }
    // inclusion matrices: columns are the kernel basis vectors
    std::vector<Matrix<F>> inc(alg->vertices());
    for (int v = 0; v < alg->vertices(); ++v) inc[v] = ker[v].basis().transpose();
    // induced arrow maps: solve inc_tgt * x = arrow * inc_src columnwise
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < alg->arrows().size(); ++a) {
        const Arrow& ar = alg->arrows()[a];
        Matrix<F> rhs = f.source().arrow_map((int)a) * inc[ar.src];
        Matrix<F> m((std::size_t)dims[ar.tgt], (std::size_t)dims[ar.src]);
        for (std::size_t c = 0; c < rhs.cols(); ++c) {
            auto col = inc[ar.tgt].solve(rhs.submatrix(0, c, rhs.rows(), 1).transpose().row(0));
            if (!col) throw std::logic_error("kernel is not arrow-stable");
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = (*col)[r];
        }
        maps.push_back(std::move(m));
    }
    AModule<F> k(alg, std::move(dims), std::move(maps), false);
    Morphism<F> incl(k, f.source(), std::move(inc), false);
    return {k, incl};
}

template <typename F>
struct Quotient {
    AModule<F> mod;
    Morphism<F> proj;     // m -> mod
    Morphism<F> section;  // mod -> m (vertexwise right inverse of proj; not a morphism in general)
};

/**
 * Quotient of `m` by the arrow-stable subrepresentation `sub`, with the
 * projection and a vertexwise section.
 */
template <typename F>
Quotient<F> quotient_with_projection(const AModule<F>& m, const std::vector<Subspace<F>>& sub) {
    const AlgebraPtr& alg = m.algebra();
    std::vector<int> dims(alg->vertices());
    std::vector<Matrix<F>> proj(alg->vertices()), sect(alg->vertices());
    for (int v = 0; v < alg->vertices(); ++v) {
        const Matrix<F>& rows = sub[v].basis();  // RREF
        std::vector<std::size_t> pivots;
        for (std::size_t r = 0; r < rows.rows(); ++r)
            for (std::size_t j = 0; j < rows.cols(); ++j)
                if (!field_is_zero(rows(r, j))) {
                    pivots.push_back(j);
                    break;
                }
        std::vector<bool> is_pivot((std::size_t)m.dim(v), false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < (std::size_t)m.dim(v); ++j)
            if (!is_pivot[j]) free.push_back(j);
        dims[v] = (int)free.size();
        // canonical reduction x -> x - sum_r x[pivot_r] * row_r, kept on free coordinates
        Matrix<F> p((std::size_t)dims[v], (std::size_t)m.dim(v));
        for (std::size_t fi = 0; fi < free.size(); ++fi) {
            p(fi, free[fi]) = F(1);
            for (std::size_t r = 0; r < pivots.size(); ++r) p(fi, pivots[r]) = -rows(r, free[fi]);
        }
        proj[v] = std::move(p);
        Matrix<F> s((std::size_t)m.dim(v), (std::size_t)dims[v]);
        for (std::size_t fi = 0; fi < free.size(); ++fi) s(free[fi], fi) = F(1);
        sect[v] = std::move(s);
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < alg->arrows().size(); ++a) {
        const Arrow& ar = alg->arrows()[a];
        maps.push_back(proj[ar.tgt] * m.arrow_map((int)a) * sect[ar.src]);
    }
    AModule<F> q(alg, std::move(dims), std::move(maps), false);
    Morphism<F> pr(m, q, std::move(proj), false);
    Morphism<F> se(q, m, std::move(sect), false);
    return Quotient<F>{q, pr, se};
}

/** Radical (arrow-ideal image) of a module, vertexwise. */
template <typename F>
std::vector<Subspace<F>> radical_subspaces(const AModule<F>& m) {
    const AlgebraPtr& alg = m.algebra();
    std::vector<Subspace<F>> rad;
    for (int v = 0; v < alg->vertices(); ++v) rad.emplace_back((std::size_t)m.dim(v));
    for (std::size_t a = 0; a < alg->arrows().size(); ++a) {
        const Arrow& ar = alg->arrows()[a];
        rad[ar.tgt] = rad[ar.tgt] + Subspace<F>::image(m.arrow_map((int)a));
    }
    return rad;
}

// ---------------------------------------------------------------------------
// projectives with their generator bookkeeping

/**
 * A direct sum of vertex projectives P_{v_0} + P_{v_1} + ..., remembering the
 * copy structure. Hom out of it is computed by evaluation at the generators.
 */
template <typename F>
class ProjModule {
public:
    ProjModule() = default;
    ProjModule(AlgebraPtr alg, std::vector<int> copies) : alg_(std::move(alg)), copies_(std::move(copies)) {
        int nv = alg_->vertices();
        basis_.assign(nv, {});
        for (int c = 0; c < (int)copies_.size(); ++c) {
            int v = copies_[c];
            for (std::size_t pidx = 0; pidx < alg_->paths_from(v).size(); ++pidx)
                basis_[alg_->path_target(v, pidx)].push_back({c, (int)pidx});
        }
        std::vector<int> dims(nv);
        for (int v = 0; v < nv; ++v) dims[v] = (int)basis_[v].size();
        std::vector<Matrix<F>> maps;
        for (std::size_t a = 0; a < alg_->arrows().size(); ++a) {
            const Arrow& ar = alg_->arrows()[a];
            Matrix<F> m((std::size_t)dims[ar.tgt], (std::size_t)dims[ar.src]);
            for (std::size_t col = 0; col < basis_[ar.src].size(); ++col) {
                auto [c, pidx] = basis_[ar.src][col];
                int ext = alg_->extend_path(copies_[c], pidx, (int)a);
                if (ext < 0) continue;
                m(index_of(ar.tgt, c, ext), col) = F(1);
            }
            maps.push_back(std::move(m));
        }
        mod_ = AModule<F>(alg_, std::move(dims), std::move(maps), false);
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<int>& copies() const { return copies_; }
    const AModule<F>& module() const { return mod_; }
    bool is_zero() const { return copies_.empty(); }

    /** Total Hom-coordinate dimension of Hom(this, X): sum over copies of dim X_{v_c}. */
    template <typename Mod>
    std::size_t hom_dim(const Mod& x) const {
        std::size_t d = 0;
        for (int v : copies_) d += (std::size_t)x.dim(v);
        return d;
    }

    /** Morphism determined by generator values; x_flat lists the images of the copy generators. */
    Morphism<F> morphism_from_generators(const AModule<F>& target, const std::vector<F>& x_flat) const {
        int nv = alg_->vertices();
        std::vector<Matrix<F>> comps;
        for (int v = 0; v < nv; ++v) comps.push_back(Matrix<F>((std::size_t)target.dim(v), basis_[v].size()));
        std::vector<std::size_t> off(copies_.size());
        std::size_t acc = 0;
        for (std::size_t c = 0; c < copies_.size(); ++c) {
            off[c] = acc;
            acc += (std::size_t)target.dim(copies_[c]);
        }
        for (int v = 0; v < nv; ++v) {
            for (std::size_t col = 0; col < basis_[v].size(); ++col) {
                auto [c, pidx] = basis_[v][col];
                Matrix<F> act = target.path_action(copies_[c], (std::size_t)pidx);
                for (std::size_t r = 0; r < (std::size_t)target.dim(v); ++r) {
                    F val(0);
                    for (std::size_t k = 0; k < (std::size_t)target.dim(copies_[c]); ++k)
                        val += act(r, k) * x_flat[off[c] + k];
                    comps[v](r, col) = val;
                }
            }
        }
        return Morphism<F>(mod_, target, std::move(comps), false);
    }

    /** Generator values of a morphism out of this projective. */
    std::vector<F> generators_of(const Morphism<F>& f) const {
        std::vector<F> x;
        for (std::size_t c = 0; c < copies_.size(); ++c) {
            int v = copies_[c];
            std::size_t col = index_of(v, (int)c, 0);
            for (std::size_t r = 0; r < (std::size_t)f.target().dim(v); ++r) x.push_back(f.at(v)(r, col));
        }
        return x;
    }

    std::size_t index_of(int vertex, int copy, int path_idx) const {
        const auto& b = basis_[vertex];
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i].first == copy && b[i].second == path_idx) return i;
        throw std::logic_error("basis element not found in projective module");
    }

    const std::vector<std::pair<int, int>>& basis_at(int v) const { return basis_[v]; }

private:
    AlgebraPtr alg_;
    std::vector<int> copies_;
    std::vector<std::vector<std::pair<int, int>>> basis_;  // per vertex: (copy, path index)
    AModule<F> mod_;
};

/** Projective cover P ->> M, using top = M / rad M. */
template <typename F>
std::pair<ProjModule<F>, Morphism<F>> projective_cover(const AModule<F>& m) {
    const AlgebraPtr& alg = m.algebra();
    auto rad = radical_subspaces(m);
    std::vector<int> copies;
    std::vector<std::vector<F>> gen_vectors;
    for (int v = 0; v < alg->vertices(); ++v) {
        // complement of the radical at v: free coordinates of its RREF basis
        const Matrix<F>& rows = rad[v].basis();
        std::vector<bool> is_pivot((std::size_t)m.dim(v), false);
        for (std::size_t r = 0; r < rows.rows(); ++r)
            for (std::size_t j = 0; j < rows.cols(); ++j)
                if (!field_is_zero(rows(r, j))) {
                    is_pivot[j] = true;
                    break;
                }
        for (std::size_t j = 0; j < (std::size_t)m.dim(v); ++j) {
            if (is_pivot[j]) continue;
            copies.push_back(v);
            std::vector<F> g((std::size_t)m.dim(v), F(0));
            g[j] = F(1);
            gen_vectors.push_back(std::move(g));
        }
    }
    ProjModule<F> p(alg, copies);
    std::vector<F> flat;
    for (auto& g : gen_vectors) flat.insert(flat.end(), g.begin(), g.end());
    Morphism<F> cover = p.morphism_from_generators(m, flat);
    // surjectivity check (Nakayama: top generates)
    for (int v = 0; v < alg->vertices(); ++v)
        if ((int)cover.at(v).rank() != m.dim(v)) throw std::logic_error("projective cover failed to surject");
    return {p, cover};
}

}  // namespace wdx::homalg
