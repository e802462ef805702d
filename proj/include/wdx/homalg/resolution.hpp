#pragma once

#include "wdx/homalg/module.hpp"

namespace wdx::homalg {

/**
 * A minimal projective resolution ... -> P^{-2} -> P^{-1} -> P^{0} ->> M,
 * built from projective covers so every syzygy sits inside the radical.
 * terms[k] is P^{-k}; d[k] : P^{-k} -> P^{-k+1} for k >= 1.
 */
template <typename F>
struct Resolution {
    AModule<F> m;
    std::vector<ProjModule<F>> terms;
    std::vector<Morphism<F>> d;  // d[0] unused placeholder; d[k]: terms[k] -> terms[k-1]
    Morphism<F> augmentation;    // terms[0] -> m

    const ProjModule<F>& term(int k) const { return terms[(std::size_t)k]; }
    int length() const { return (int)terms.size() - 1; }
};

/**
 * Resolve M to the requested length; exact in degrees > -length by
 * construction. Cover lifts can be randomized downstream by base-changing M.
 */
template <typename F>
Resolution<F> projective_resolution(const AModule<F>& m, int length) {
    if (length < 0) throw std::invalid_argument("resolution length must be >= 0");
    Resolution<F> r;
    r.m = m;
    auto [p0, eps] = projective_cover(m);
    r.terms.push_back(p0);
    r.augmentation = eps;
    r.d.push_back(Morphism<F>::zero(p0.module(), p0.module()));  // placeholder
    Morphism<F> onto = eps;                                      // current cover whose kernel we resolve
    for (int k = 1; k <= length; ++k) {
        auto [ker, incl] = kernel_with_inclusion(onto);
        auto [pk, cover] = projective_cover(ker);
        r.terms.push_back(pk);
        r.d.push_back(incl * cover);
        onto = cover;
    }
    return r;
}

/** Hom(P, N) where P is a structured projective: one block of N_{v_c} per copy. */
template <typename F>
struct HomSpace {
    std::vector<int> copies;
    std::vector<int> copy_dims;  // dim N_{v_c}
    std::size_t total = 0;
};

template <typename F>
HomSpace<F> hom_space(const ProjModule<F>& p, const AModule<F>& n) {
    HomSpace<F> h;
    h.copies = p.copies();
    for (int v : h.copies) {
        h.copy_dims.push_back(n.dim(v));
        h.total += (std::size_t)n.dim(v);
    }
    return h;
}

/**
 * Matrix of precomposition Hom(P^{-k}, N) -> Hom(P^{-k-1}, N) with the
 * differential d^{-k-1} : P^{-k-1} -> P^{-k}, in generator coordinates.
 */
template <typename F>
Matrix<F> hom_differential(const Resolution<F>& r, int k, const AModule<F>& n) {
    const ProjModule<F>& src_p = r.terms[(std::size_t)k];
    const ProjModule<F>& dst_p = r.terms[(std::size_t)k + 1];
    const Morphism<F>& diff = r.d[(std::size_t)k + 1];  // dst_p -> src_p
    std::size_t rows = dst_p.hom_dim(n), cols = src_p.hom_dim(n);
    Matrix<F> out(rows, cols);
    // column = basis morphism phi with a single unit generator value
    std::vector<F> x(cols, F(0));
    for (std::size_t c = 0; c < cols; ++c) {
        x[c] = F(1);
        Morphism<F> phi = src_p.morphism_from_generators(n, x);
        auto vals = dst_p.generators_of(phi * diff);
        for (std::size_t rix = 0; rix < rows; ++rix) out(rix, c) = vals[rix];
        x[c] = F(0);
    }
    return out;
}

/** dim Ext^k(M, N) for 0 <= k <= kmax, as cohomology of Hom(P_*, N). */
template <typename F>
std::vector<std::size_t> ext_dims(const AModule<F>& m, const AModule<F>& n, int kmax) {
    if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
    if (m.is_zero() || n.is_zero()) return std::vector<std::size_t>((std::size_t)kmax + 1, 0);
    Resolution<F> r = projective_resolution(m, kmax + 1);
    std::vector<Matrix<F>> delta;  // delta[k] : Hom(P^{-k},N) -> Hom(P^{-k-1},N)
    for (int k = 0; k <= kmax; ++k) delta.push_back(hom_differential(r, k, n));
    std::vector<std::size_t> out;
    for (int k = 0; k <= kmax; ++k) {
        std::size_t cycles = delta[(std::size_t)k].nullity();
        std::size_t boundaries = k == 0 ? 0 : delta[(std::size_t)k - 1].rank();
        out.push_back(cycles - boundaries);
    }
    return out;
}

/**
 * A degree-k extension class, carried by a cocycle P^{-k} -> N in generator
 * coordinates over a fixed resolution of the source module.
 */
template <typename F>
struct ExtElement {
    int degree = 0;
    std::vector<F> cocycle;  // Hom(P^{-degree}, N) coordinates
};

/** Basis of Ext^k(M, N) as cocycle representatives over the given resolution. */
template <typename F>
std::vector<ExtElement<F>> ext_basis(const Resolution<F>& r, const AModule<F>& n, int k) {
    Matrix<F> out_d = hom_differential(r, k, n);
    std::vector<std::vector<F>> cycles = out_d.kernel_basis();
    // boundary subspace
    Subspace<F> bdry(out_d.cols());
    if (k > 0) {
        Matrix<F> in_d = hom_differential(r, k - 1, n);
        bdry = Subspace<F>::image(in_d);
    }
    std::vector<ExtElement<F>> basis;
    Subspace<F> seen = bdry;
    for (auto& z : cycles) {
        Subspace<F> cand = seen + Subspace<F>::span_vectors(out_d.cols(), {z});
        if (cand.dim() > seen.dim()) {
            basis.push_back(ExtElement<F>{k, z});
            seen = cand;
        }
    }
    return basis;
}

/** True iff the cocycle is a coboundary over the given resolution. */
template <typename F>
bool ext_class_is_zero(const Resolution<F>& r, const AModule<F>& n, const ExtElement<F>& e) {
    if (e.degree == 0) {
        for (auto& v : e.cocycle)
            if (!field_is_zero(v)) return false;
        return true;
    }
    Matrix<F> in_d = hom_differential(r, e.degree - 1, n);
    return Subspace<F>::image(in_d).contains(e.cocycle);
}

/**
 * Chain map lift of a cocycle: given alpha in Ext^a(M, N) over res_m, build
 * f_k : P_M^{-a-k} -> P_N^{-k} for 0 <= k <= depth with eps_N f_0 = alpha
 * and d_N f_k = f_{k-1} d_M.
 */
template <typename F>
std::vector<Morphism<F>> lift_cocycle(const Resolution<F>& res_m, const ExtElement<F>& alpha,
                                      const Resolution<F>& res_n, int depth) {
    int a = alpha.degree;
    if (res_m.length() < a + depth || res_n.length() < depth)
        throw std::invalid_argument("resolutions too short to lift the cocycle");
    const AModule<F>& n = res_n.m;
    Morphism<F> f_prev = res_m.terms[(std::size_t)a].morphism_from_generators(n, alpha.cocycle);
    std::vector<Morphism<F>> lifts;
    // f_0 : P_M^{-a} -> P_N^{0} with eps_N f_0 = alpha-as-morphism
    {
        const ProjModule<F>& src = res_m.terms[(std::size_t)a];
        std::vector<F> gens;
        for (std::size_t c = 0; c < src.copies().size(); ++c) {
            int v = src.copies()[c];
            // generator value of alpha at copy c, solved through eps_N at vertex v
            std::size_t col = src.index_of(v, (int)c, 0);
            std::vector<F> val((std::size_t)n.dim(v));
            for (std::size_t rix = 0; rix < val.size(); ++rix) val[rix] = f_prev.at(v)(rix, col);
            auto pre = res_n.augmentation.at(v).solve(val);
            if (!pre) throw std::logic_error("augmentation failed to lift a cocycle value");
            gens.insert(gens.end(), pre->begin(), pre->end());
        }
        lifts.push_back(src.morphism_from_generators(res_n.terms[0].module(), gens));
    }
    for (int k = 1; k <= depth; ++k) {
        const ProjModule<F>& src = res_m.terms[(std::size_t)(a + k)];
        Morphism<F> rhs = lifts.back() * res_m.d[(std::size_t)(a + k)];  // P_M^{-a-k} -> P_N^{-k+1}
        const Morphism<F>& dn = res_n.d[(std::size_t)k];                 // P_N^{-k} -> P_N^{-k+1}
        std::vector<F> gens;
        for (std::size_t c = 0; c < src.copies().size(); ++c) {
            int v = src.copies()[c];
            std::size_t col = src.index_of(v, (int)c, 0);
            std::vector<F> val((std::size_t)rhs.target().dim(v));
            for (std::size_t rix = 0; rix < val.size(); ++rix) val[rix] = rhs.at(v)(rix, col);
            auto pre = dn.at(v).solve(val);
            if (!pre) throw std::logic_error("resolution is not exact where a lift was required");
            gens.insert(gens.end(), pre->begin(), pre->end());
        }
        lifts.push_back(src.morphism_from_generators(res_n.terms[(std::size_t)k].module(), gens));
    }
    return lifts;
}

/**
 * Yoneda composition Ext^a(M,N) x Ext^b(N,P) -> Ext^{a+b}(M,P): lift the
 * first cocycle through the resolution of N and compose with the second.
 */
template <typename F>
ExtElement<F> yoneda_compose(const Resolution<F>& res_m, const ExtElement<F>& alpha, const Resolution<F>& res_n,
                             const ExtElement<F>& beta, const AModule<F>& p) {
    int a = alpha.degree, b = beta.degree;
    auto lifts = lift_cocycle(res_m, alpha, res_n, b);
    Morphism<F> beta_m = res_n.terms[(std::size_t)b].morphism_from_generators(p, beta.cocycle);
    Morphism<F> comp = beta_m * lifts[(std::size_t)b];  // P_M^{-a-b} -> P
    return ExtElement<F>{a + b, res_m.terms[(std::size_t)(a + b)].generators_of(comp)};
}

}  // namespace wdx::homalg
