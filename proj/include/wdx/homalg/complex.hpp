#pragma once

#include "wdx/homalg/resolution.hpp"

namespace wdx::homalg {

/**
 * Bounded cochain complex of modules; terms[q] for min_deg <= q <= max_deg,
 * differentials d^q : X^q -> X^{q+1} with d^2 = 0.
 */
template <typename F>
class BoundedComplex {
public:
    BoundedComplex() = default;
    BoundedComplex(AlgebraPtr alg, int min_deg, std::vector<AModule<F>> terms, std::vector<Morphism<F>> diffs,
                   bool check = true)
        : alg_(std::move(alg)), min_deg_(min_deg), terms_(std::move(terms)), diffs_(std::move(diffs)) {
        if (terms_.empty()) {
            terms_.push_back(zero_module<F>(alg_));
            diffs_.clear();
        }
        if (diffs_.size() + 1 != terms_.size()) throw std::invalid_argument("need one differential between consecutive terms");
        if (check) {
            for (std::size_t i = 0; i + 1 < terms_.size(); ++i) {
                if (!(diffs_[i].source() == terms_[i]) || !(diffs_[i].target() == terms_[i + 1]))
                    throw std::invalid_argument("differential endpoints mismatch");
            }
            for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
                if (!(diffs_[i + 1] * diffs_[i]).is_zero()) throw std::invalid_argument("d^2 != 0");
        }
    }

    static BoundedComplex single(const AModule<F>& m, int degree) {
        return BoundedComplex(m.algebra(), degree, {m}, {});
    }

    const AlgebraPtr& algebra() const { return alg_; }
    int min_deg() const { return min_deg_; }
    int max_deg() const { return min_deg_ + (int)terms_.size() - 1; }

    const AModule<F>& term(int q) const {
        static thread_local AModule<F> zero;
        if (q < min_deg_ || q > max_deg()) {
            zero = zero_module<F>(alg_);
            return zero;
        }
        return terms_[(std::size_t)(q - min_deg_)];
    }
    /** d^q : X^q -> X^{q+1}. */
    Morphism<F> diff(int q) const {
        if (q >= min_deg_ && q < max_deg()) return diffs_[(std::size_t)(q - min_deg_)];
        return Morphism<F>::zero(term(q), term(q + 1));
    }

    /** Shift X[k]: term q of the shift is X^{q+k} (differentials keep their matrices). */
    BoundedComplex shift(int k) const { return BoundedComplex(alg_, min_deg_ - k, terms_, diffs_, false); }

    /** H^q as a module, with the subquotient data (cycles inclusion, projection, section). */
    struct Cohomology {
        AModule<F> h;
        Morphism<F> cycles_incl;  // Z^q -> X^q
        Morphism<F> proj;         // Z^q -> H^q
        Morphism<F> section;      // H^q -> Z^q, vertexwise right inverse

        /** Class of a cycle given in X^q coordinates. */
        std::vector<F> class_of(int nv, const std::vector<std::vector<F>>& xq_coords) const {
            std::vector<F> out;
            for (int v = 0; v < nv; ++v) {
                auto z = cycles_incl.at(v).solve(xq_coords[(std::size_t)v]);
                if (!z) throw std::logic_error("vector is not a cycle");
                auto h = proj.at(v).apply(*z);
                out.insert(out.end(), h.begin(), h.end());
            }
            return out;
        }
    };

    Cohomology cohomology_at(int q) const {
        Morphism<F> dq = diff(q);
        auto [z, incl] = kernel_with_inclusion(dq);
        // image of d^{q-1} expressed inside Z
        Morphism<F> din = diff(q - 1);
        std::vector<Subspace<F>> sub;
        for (int v = 0; v < alg_->vertices(); ++v) {
            Matrix<F> img = din.at(v);  // X^{q-1}_v -> X^q_v
            // solve incl * y = img columns
            Matrix<F> gens(img.cols(), (std::size_t)z.dim(v));
            for (std::size_t c = 0; c < img.cols(); ++c) {
                std::vector<F> col((std::size_t)img.rows());
                for (std::size_t r = 0; r < img.rows(); ++r) col[r] = img(r, c);
                auto y = incl.at(v).solve(col);
                if (!y) throw std::logic_error("image of d is not contained in the cycles");
                for (std::size_t j = 0; j < y->size(); ++j) gens(c, j) = (*y)[j];
            }
            sub.push_back(Subspace<F>::span(gens));
        }
        Quotient<F> q2 = quotient_with_projection(z, sub);
        return Cohomology{q2.mod, incl, q2.proj, q2.section};
    }

    std::vector<std::size_t> cohomology_dims() const {
        std::vector<std::size_t> out;
        for (int q = min_deg_; q <= max_deg(); ++q) out.push_back(cohomology_at(q).h.total_dim());
        return out;
    }

    bool is_acyclic() const {
        for (int q = min_deg_; q <= max_deg(); ++q)
            if (cohomology_at(q).h.total_dim() != 0) return false;
        return true;
    }

private:
    AlgebraPtr alg_;
    int min_deg_ = 0;
    std::vector<AModule<F>> terms_;
    std::vector<Morphism<F>> diffs_;
};

/** Chain endomorphism of a bounded complex: per-degree morphisms commuting with d. */
template <typename F>
class ChainEndo {
public:
    ChainEndo() = default;
    ChainEndo(const BoundedComplex<F>& x, std::vector<Morphism<F>> comps, bool check = true)
        : min_deg_(x.min_deg()), comps_(std::move(comps)) {
        if ((int)comps_.size() != x.max_deg() - x.min_deg() + 1)
            throw std::invalid_argument("one component per degree required");
        if (check) {
            for (int q = x.min_deg(); q < x.max_deg(); ++q)
                if (!((x.diff(q) * at(q)) == (at(q + 1) * x.diff(q))))
                    throw std::invalid_argument("endomorphism does not commute with the differential");
        }
    }
    const Morphism<F>& at(int q) const { return comps_[(std::size_t)(q - min_deg_)]; }
    int min_deg() const { return min_deg_; }
    int max_deg() const { return min_deg_ + (int)comps_.size() - 1; }

private:
    int min_deg_ = 0;
    std::vector<Morphism<F>> comps_;
};

/**
 * Bounded-above complex of structured projectives with a quasi-isomorphism
 * to X, built degreewise from the top so that the mapping cone is exact:
 * Q^q covers ker[(u,x) -> (-d_Q u, f u + d_X x)] inside Q^{q+1} + X^q.
 */
template <typename F>
struct ProjComplex {
    int min_deg = 0;  // lowest constructed degree (truncation point)
    int max_deg = -1;
    std::vector<ProjModule<F>> terms;  // index 0 = min_deg
    std::vector<Morphism<F>> d;        // d[i] : terms[i] -> terms[i+1]
    std::vector<Morphism<F>> to_x;     // per degree, Q^q -> X^q

    const ProjModule<F>& term_at(int q) const { return terms[(std::size_t)(q - min_deg)]; }
    bool has(int q) const { return q >= min_deg && q <= max_deg && !terms[(std::size_t)(q - min_deg)].is_zero(); }
    Morphism<F> diff_at(int q) const {  // Q^q -> Q^{q+1}
        if (q < min_deg || q >= max_deg) {
            const AModule<F>& s = q >= min_deg && q <= max_deg ? term_at(q).module() : zero_module<F>(terms[0].algebra());
            const AModule<F>& t =
                q + 1 >= min_deg && q + 1 <= max_deg ? term_at(q + 1).module() : zero_module<F>(terms[0].algebra());
            return Morphism<F>::zero(s, t);
        }
        return d[(std::size_t)(q - min_deg)];
    }
};

/**
 * Projective replacement of a bounded complex, constructed down to
 * min_supp(X) - extra_depth.
 */
template <typename F>
ProjComplex<F> projective_replacement(const BoundedComplex<F>& x, int extra_depth) {
    const AlgebraPtr& alg = x.algebra();
    int top = x.max_deg();
    int bottom = x.min_deg() - extra_depth;
    ProjComplex<F> q;
    q.min_deg = bottom;
    q.max_deg = top;
    int nq = top - bottom + 1;
    std::vector<ProjModule<F>> terms((std::size_t)nq);
    std::vector<Morphism<F>> dmaps((std::size_t)nq);  // dmaps[i]: terms[i] -> terms[i+1]
    std::vector<Morphism<F>> fmaps((std::size_t)nq);
    for (int deg = top; deg >= bottom; --deg) {
        // cone space at degree deg: Q^{deg+1} (+) X^deg
        bool have_up = deg + 1 <= top;
        AModule<F> qup = have_up ? terms[(std::size_t)(deg + 1 - bottom)].module() : zero_module<F>(alg);
        const AModule<F>& xq = x.term(deg);
        auto [cone, incs] = direct_sum_with_maps(qup, xq);
        auto& [inc_q, inc_x] = incs;
        // D : cone^deg -> cone^{deg+1} = Q^{deg+2} (+) X^{deg+1}
        AModule<F> qup2 = deg + 2 <= top ? terms[(std::size_t)(deg + 2 - bottom)].module() : zero_module<F>(alg);
        const AModule<F>& xq1 = x.term(deg + 1);
        auto [cone1, incs1] = direct_sum_with_maps(qup2, xq1);
        auto& [inc1_q, inc1_x] = incs1;
        Morphism<F> d_up = have_up && deg + 2 <= top
                               ? dmaps[(std::size_t)(deg + 1 - bottom)]
                               : Morphism<F>::zero(qup, qup2);
        Morphism<F> f_up = have_up ? fmaps[(std::size_t)(deg + 1 - bottom)] : Morphism<F>::zero(qup, xq1);
        // D(u, x) = (-d_Q u, f u + d_X x)
        std::vector<Matrix<F>> dcone;
        for (int v = 0; v < alg->vertices(); ++v) {
            Matrix<F> m((std::size_t)cone1.dim(v), (std::size_t)cone.dim(v));
            Matrix<F> a = d_up.at(v).negate();
            Matrix<F> b = f_up.at(v);
            Matrix<F> c = x.diff(deg).at(v);
            m.set_block(0, 0, a);
            m.set_block((std::size_t)qup2.dim(v), 0, b);
            m.set_block((std::size_t)qup2.dim(v), (std::size_t)qup.dim(v), c);
            dcone.push_back(std::move(m));
        }
        Morphism<F> big(cone, cone1, std::move(dcone), false);
        auto [k, incl] = kernel_with_inclusion(big);
        auto [p, cover] = projective_cover(k);
        Morphism<F> psi = incl * cover;  // P -> Q^{deg+1} (+) X^deg
        // split psi into the two components
        std::vector<Matrix<F>> psi1, psi2;
        for (int v = 0; v < alg->vertices(); ++v) {
            psi1.push_back(psi.at(v).submatrix(0, 0, (std::size_t)qup.dim(v), (std::size_t)p.module().dim(v)));
            psi2.push_back(
                psi.at(v).submatrix((std::size_t)qup.dim(v), 0, (std::size_t)xq.dim(v), (std::size_t)p.module().dim(v)));
        }
        terms[(std::size_t)(deg - bottom)] = p;
        fmaps[(std::size_t)(deg - bottom)] = Morphism<F>(p.module(), xq, psi2, false);
        if (have_up) {
            // d_Q^deg := -psi1
            std::vector<Matrix<F>> neg;
            for (auto& mtx : psi1) neg.push_back(mtx.negate());
            dmaps[(std::size_t)(deg - bottom)] = Morphism<F>(p.module(), qup, std::move(neg), false);
        } else {
            dmaps[(std::size_t)(deg - bottom)] = Morphism<F>::zero(p.module(), zero_module<F>(alg));
        }
    }
    q.terms = std::move(terms);
    q.to_x = std::move(fmaps);
    q.d = std::move(dmaps);
    return q;
}

}  // namespace wdx::homalg
