#pragma once

#include "wdx/homalg/splitting.hpp"

namespace wdx::homalg {

/** Outcome of matching End_{D^b}((+) S_i[-(i-1)]) over the ladder algebra with T_d. */
struct TdReport {
    std::size_t dim0 = 0;        // dimension of the degree-0 part
    bool dims_match = false;     // equals d(d+1)/2 and blocks e_i E e_j have dimension [i <= j]
    bool products_match = false; // consecutive generators compose to nonzero elements, all the way up
};

/**
 * Build X = S_1[0] + S_2[-1] + ... + S_d[-(d-1)] over the ladder algebra and
 * verify that its derived endomorphism algebra in degree zero is the algebra
 * of upper-triangular d x d matrices: block dimensions and the nonvanishing
 * of all iterated generator products pin the isomorphism type.
 */
template <typename F>
TdReport td_realization(int d) {
    AlgebraPtr alg = lambda_algebra(d);
    // X^q = S_{q+1} in degree q for q = 0..d-1, zero differentials
    std::vector<AModule<F>> terms;
    std::vector<Morphism<F>> diffs;
    for (int q = 0; q < d; ++q) terms.push_back(simple_module<F>(alg, q));
    for (int q = 0; q + 1 < d; ++q) diffs.push_back(Morphism<F>::zero(terms[(std::size_t)q], terms[(std::size_t)q + 1]));
    BoundedComplex<F> x(alg, 0, terms, diffs, false);

    int depth = d + 4;
    ProjComplex<F> q = projective_replacement(x, depth);
    TotHom<F> qq(q, DegComplex<F>::of_proj(q, alg), alg);
    HomClasses<F> h0 = hom_classes(qq, 0);
    TdReport rep;
    rep.dim0 = h0.basis.size();

    // projections onto the summands, lifted to the replacement
    std::vector<std::vector<F>> proj;
    for (int i = 0; i < d; ++i) {
        std::vector<Morphism<F>> comps;
        for (int deg = 0; deg < d; ++deg) {
            Morphism<F> c = deg == i ? Morphism<F>::identity(terms[(std::size_t)deg])
                                     : Morphism<F>::zero(terms[(std::size_t)deg], terms[(std::size_t)deg]);
            comps.push_back(std::move(c));
        }
        proj.push_back(lift_endo_to_replacement(q, x, ChainEndo<F>(x, comps, false)));
    }

    // block dimensions: e_i End e_j spanned by p_i b p_j over the basis
    std::vector<std::vector<std::size_t>> block_dim((std::size_t)d, std::vector<std::size_t>((std::size_t)d, 0));
    std::vector<std::vector<std::vector<F>>> block_gen((std::size_t)d,
                                                       std::vector<std::vector<F>>((std::size_t)d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Subspace<F> span(h0.basis.size());
            for (auto& b : h0.basis) {
                auto pb = compose_endo_cocycles(qq, 0, proj[(std::size_t)i], 0, b);
                auto pbp = compose_endo_cocycles(qq, 0, pb, 0, proj[(std::size_t)j]);
                auto coeff = h0.coefficients(pbp);
                if (!coeff) return rep;
                bool zero = true;
                for (auto& v : *coeff) zero = zero && field_is_zero(v);
                if (zero) continue;
                Matrix<F> one(1, coeff->size());
                for (std::size_t k = 0; k < coeff->size(); ++k) one(0, k) = (*coeff)[k];
                Subspace<F> cand = span + Subspace<F>::span(one);
                if (cand.dim() > span.dim()) {
                    span = cand;
                    if (block_gen[(std::size_t)i][(std::size_t)j].empty())
                        block_gen[(std::size_t)i][(std::size_t)j] = pbp;
                }
            }
            block_dim[(std::size_t)i][(std::size_t)j] = span.dim();
        }

    rep.dims_match = rep.dim0 == (std::size_t)(d * (d + 1) / 2);
    for (int i = 0; i < d && rep.dims_match; ++i)
        for (int j = 0; j < d && rep.dims_match; ++j)
            rep.dims_match = block_dim[(std::size_t)i][(std::size_t)j] == (std::size_t)(i <= j ? 1 : 0);
    if (!rep.dims_match) return rep;

    // beta_{i,i+1} generate: all iterated products are nonzero
    rep.products_match = true;
    for (int i = 0; i < d && rep.products_match; ++i) {
        std::vector<F> acc = proj[(std::size_t)i];
        for (int j = i + 1; j < d && rep.products_match; ++j) {
            acc = compose_endo_cocycles(qq, 0, acc, 0, block_gen[(std::size_t)j - 1][(std::size_t)j]);
            auto coeff = h0.coefficients(acc);
            bool zero = true;
            for (auto& v : *coeff) zero = zero && field_is_zero(v);
            if (zero) rep.products_match = false;
        }
    }
    return rep;
}

}  // namespace wdx::homalg
