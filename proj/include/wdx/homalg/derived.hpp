#pragma once

#include "wdx/homalg/complex.hpp"

#include <functional>

namespace wdx::homalg {

/** Uniform view of a complex of modules by degree. */
template <typename F>
struct DegComplex {
    int lo = 0, hi = -1;
    std::function<const AModule<F>&(int)> term;
    std::function<Morphism<F>(int)> diff;  // q -> q+1

    static DegComplex of(const BoundedComplex<F>& x) {
        return DegComplex{x.min_deg(), x.max_deg(), [&x](int q) -> const AModule<F>& { return x.term(q); },
                          [&x](int q) { return x.diff(q); }};
    }
    static DegComplex of_proj(const ProjComplex<F>& q, const AlgebraPtr& alg) {
        return DegComplex{
            q.min_deg, q.max_deg,
            [&q, alg](int deg) -> const AModule<F>& {
                static thread_local AModule<F> zero;
                if (deg < q.min_deg || deg > q.max_deg) {
                    zero = zero_module<F>(alg);
                    return zero;
                }
                return q.term_at(deg).module();
            },
            [&q, alg](int deg) {
                if (deg >= q.min_deg && deg < q.max_deg) return q.diff_at(deg);
                const AModule<F>& s = deg >= q.min_deg && deg <= q.max_deg ? q.term_at(deg).module() : zero_module<F>(alg);
                return Morphism<F>::zero(s, deg + 1 >= q.min_deg && deg + 1 <= q.max_deg ? q.term_at(deg + 1).module()
                                                                                         : zero_module<F>(alg));
            }};
    }
};

/**
 * Total Hom complex Hom^n = (+)_q Hom(Q^q, Y^{q+n}) in generator coordinates,
 * with differential d_Y o phi - (-1)^n phi o d_Q.
 */
template <typename F>
class TotHom {
public:
    TotHom(const ProjComplex<F>& q, DegComplex<F> y, const AlgebraPtr& alg) : q_(q), y_(std::move(y)), alg_(alg) {}

    std::size_t block_dim(int n, int deg) const {
        if (deg < q_.min_deg || deg > q_.max_deg) return 0;
        int ydeg = deg + n;
        if (ydeg < y_.lo || ydeg > y_.hi) return 0;
        return q_.term_at(deg).hom_dim(y_.term(ydeg));
    }
    std::size_t dim(int n) const {
        std::size_t d = 0;
        for (int deg = q_.min_deg; deg <= q_.max_deg; ++deg) d += block_dim(n, deg);
        return d;
    }
    std::size_t offset(int n, int deg) const {
        std::size_t off = 0;
        for (int d2 = q_.min_deg; d2 < deg; ++d2) off += block_dim(n, d2);
        return off;
    }

    /** Matrix of the total differential Hom^n -> Hom^{n+1}. */
    Matrix<F> delta(int n) const {
        std::size_t rows = dim(n + 1), cols = dim(n);
        Matrix<F> out(rows, cols);
        F sign = n % 2 == 0 ? F(-1) : F(1);  // -(-1)^n
        for (int deg = q_.min_deg; deg <= q_.max_deg; ++deg) {
            std::size_t bd = block_dim(n, deg);
            if (bd == 0) continue;
            const ProjModule<F>& p = q_.term_at(deg);
            const AModule<F>& ytgt = y_.term(deg + n);
            std::vector<F> coords(bd, F(0));
            for (std::size_t c = 0; c < bd; ++c) {
                coords[c] = F(1);
                Morphism<F> phi = p.morphism_from_generators(ytgt, coords);
                coords[c] = F(0);
                // d_Y o phi : lands in block (n+1, deg)
                if (block_dim(n + 1, deg) > 0) {
                    auto vals = p.generators_of(y_.diff(deg + n) * phi);
                    std::size_t roff = offset(n + 1, deg);
                    for (std::size_t r = 0; r < vals.size(); ++r) out(roff + r, offset(n, deg) + c) += vals[r];
                }
                // phi o d_Q : lands in block (n+1, deg-1)
                if (deg - 1 >= q_.min_deg && block_dim(n + 1, deg - 1) > 0) {
                    auto vals = q_.term_at(deg - 1).generators_of(phi * q_.diff_at(deg - 1));
                    std::size_t roff = offset(n + 1, deg - 1);
                    for (std::size_t r = 0; r < vals.size(); ++r)
                        out(roff + r, offset(n, deg) + c) += sign * vals[r];
                }
            }
        }
        return out;
    }

    /** Per-degree morphisms of a coordinate vector. */
    std::map<int, Morphism<F>> materialize(int n, const std::vector<F>& coords) const {
        std::map<int, Morphism<F>> out;
        for (int deg = q_.min_deg; deg <= q_.max_deg; ++deg) {
            std::size_t bd = block_dim(n, deg);
            if (bd == 0) continue;
            std::vector<F> sub(coords.begin() + (long)offset(n, deg), coords.begin() + (long)(offset(n, deg) + bd));
            out.emplace(deg, q_.term_at(deg).morphism_from_generators(y_.term(deg + n), sub));
        }
        return out;
    }

    const ProjComplex<F>& source() const { return q_; }
    const DegComplex<F>& target_complex() const { return y_; }

private:
    const ProjComplex<F>& q_;
    DegComplex<F> y_;
    AlgebraPtr alg_;
};

/** Composition of Hom(Q,Q) cocycles: (phi o psi)_q = phi_{q+m} o psi_q, degrees add. */
template <typename F>
std::vector<F> compose_endo_cocycles(const TotHom<F>& th, int n, const std::vector<F>& phi, int m,
                                     const std::vector<F>& psi) {
    const ProjComplex<F>& q = th.source();
    auto phi_m = th.materialize(n, phi);
    auto psi_m = th.materialize(m, psi);
    std::vector<F> out(th.dim(n + m), F(0));
    for (int deg = q.min_deg; deg <= q.max_deg; ++deg) {
        std::size_t bd = th.block_dim(n + m, deg);
        if (bd == 0) continue;
        auto itp = psi_m.find(deg);
        auto itf = phi_m.find(deg + m);
        if (itp == psi_m.end() || itf == phi_m.end()) continue;
        auto vals = q.term_at(deg).generators_of(itf->second * itp->second);
        for (std::size_t r = 0; r < vals.size(); ++r) out[th.offset(n + m, deg) + r] = vals[r];
    }
    return out;
}

/** Basis of H^n(TotHom) as cocycle representatives, plus the coboundary space. */
template <typename F>
struct HomClasses {
    std::vector<std::vector<F>> basis;  // cocycle representatives
    Subspace<F> boundaries;
    Matrix<F> delta_out;

    /** Coefficients of a cocycle's class in the basis; empty optional if not a cocycle. */
    std::optional<std::vector<F>> coefficients(const std::vector<F>& cocycle) const {
        std::size_t nb = basis.size();
        std::size_t dim = cocycle.size();
        Matrix<F> sys(dim, nb + boundaries.dim());
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t i = 0; i < dim; ++i) sys(i, j) = basis[j][i];
        for (std::size_t j = 0; j < boundaries.dim(); ++j)
            for (std::size_t i = 0; i < dim; ++i) sys(i, nb + j) = boundaries.basis()(j, i);
        auto sol = sys.solve(cocycle);
        if (!sol) return std::nullopt;
        return std::vector<F>(sol->begin(), sol->begin() + (long)nb);
    }
};

template <typename F>
HomClasses<F> hom_classes(const TotHom<F>& th, int n) {
    Matrix<F> dn = th.delta(n);
    Matrix<F> dprev = th.delta(n - 1);
    HomClasses<F> out;
    out.delta_out = dn;
    out.boundaries = Subspace<F>::image(dprev);
    Subspace<F> seen = out.boundaries;
    for (auto& z : dn.kernel_basis()) {
        Subspace<F> cand = seen + Subspace<F>::span_vectors(dn.cols(), {z});
        if (cand.dim() > seen.dim()) {
            out.basis.push_back(z);
            seen = cand;
        }
    }
    return out;
}

/** dim Hom_{D^b}(X, Y[n]) for n in [nlo, nhi]. */
template <typename F>
std::vector<std::size_t> hom_d_dims(const BoundedComplex<F>& x, const BoundedComplex<F>& y, int nlo, int nhi) {
    int depth = (x.max_deg() - x.min_deg()) + (y.max_deg() - y.min_deg()) + std::max(0, nhi - nlo) + 4;
    ProjComplex<F> q = projective_replacement(x, depth);
    TotHom<F> th(q, DegComplex<F>::of(y), x.algebra());
    std::vector<std::size_t> out;
    for (int n = nlo; n <= nhi; ++n) out.push_back(hom_classes(th, n).basis.size());
    return out;
}

// ---------------------------------------------------------------------------
// linear solving over chain-map spaces

/**
 * Lift a chain endomorphism of X to the replacement Q: find Phi with
 * delta(Phi)=0 and f o Phi - phi o f null-homotopic; returns Phi coordinates.
 */
template <typename F>
std::vector<F> lift_endo_to_replacement(const ProjComplex<F>& q, const BoundedComplex<F>& x, const ChainEndo<F>& phi) {
    const AlgebraPtr& alg = x.algebra();
    TotHom<F> qq(q, DegComplex<F>::of_proj(q, alg), alg);
    TotHom<F> qx(q, DegComplex<F>::of(x), alg);
    std::size_t n_phi = qq.dim(0);
    std::size_t n_h = qx.dim(-1);
    Matrix<F> d_qq = qq.delta(0);
    Matrix<F> d_qx = qx.delta(-1);
    // rows: [delta Phi = 0] and [F(Phi) - delta(H) = rhs]
    // where F(Phi) = f o Phi expressed in Hom^0(Q, X) coordinates.
    // Build matrix of Phi -> f o Phi blockwise.
    std::size_t hom0qx = qx.dim(0);
    Matrix<F> fpost(hom0qx, n_phi);
    {
        std::vector<F> e(n_phi, F(0));
        for (std::size_t c = 0; c < n_phi; ++c) {
            e[c] = F(1);
            auto mats = qq.materialize(0, e);
            e[c] = F(0);
            for (auto& [deg, mor] : mats) {
                if (qx.block_dim(0, deg) == 0) continue;
                auto vals = q.term_at(deg).generators_of(q.to_x[(std::size_t)(deg - q.min_deg)] * mor);
                std::size_t roff = qx.offset(0, deg);
                for (std::size_t r = 0; r < vals.size(); ++r) fpost(roff + r, c) += vals[r];
            }
        }
    }
    // rhs: phi o f in Hom^0(Q, X) coordinates
    std::vector<F> rhs(hom0qx, F(0));
    for (int deg = q.min_deg; deg <= q.max_deg; ++deg) {
        if (qx.block_dim(0, deg) == 0) continue;
        int xd = deg;
        if (xd < x.min_deg() || xd > x.max_deg()) continue;
        Morphism<F> comp = phi.at(xd) * q.to_x[(std::size_t)(deg - q.min_deg)];
        auto vals = q.term_at(deg).generators_of(comp);
        std::size_t roff = qx.offset(0, deg);
        for (std::size_t r = 0; r < vals.size(); ++r) rhs[roff + r] = vals[r];
    }
    std::size_t rows = d_qq.rows() + hom0qx;
    Matrix<F> sys(rows, n_phi + n_h);
    std::vector<F> b(rows, F(0));
    sys.set_block(0, 0, d_qq);
    sys.set_block(d_qq.rows(), 0, fpost);
    // -delta(H): subtract qx.delta(-1)
    for (std::size_t i = 0; i < d_qx.rows(); ++i)
        for (std::size_t j = 0; j < d_qx.cols(); ++j) sys(d_qq.rows() + i, n_phi + j) = -d_qx(i, j);
    for (std::size_t i = 0; i < hom0qx; ++i) b[d_qq.rows() + i] = rhs[i];
    auto sol = sys.solve(b);
    if (!sol) throw std::logic_error("chain endomorphism could not be lifted to the replacement");
    return std::vector<F>(sol->begin(), sol->begin() + (long)n_phi);
}

// ---------------------------------------------------------------------------
// polynomials over F

template <typename F>
using Poly = std::vector<F>;  // coefficients, lowest degree first

template <typename F>
Poly<F> poly_trim(Poly<F> p) {
    while (!p.empty() && field_is_zero(p.back())) p.pop_back();
    return p;
}

template <typename F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> out(a.size() + b.size() - 1, F(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(std::move(out));
}

template <typename F>
Poly<F> poly_rem(Poly<F> a, const Poly<F>& b) {
    a = poly_trim(std::move(a));
    while (a.size() >= b.size() && !b.empty()) {
        F f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

/** True iff gcd(a, b) is a nonzero constant (comaximal in F[T]). */
template <typename F>
bool poly_coprime(Poly<F> a, Poly<F> b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        a = poly_rem(std::move(a), b);
        std::swap(a, b);
    }
    return a.size() == 1;
}

template <typename F>
Matrix<F> poly_eval(const Poly<F>& p, const Matrix<F>& m) {
    Matrix<F> out(m.rows(), m.cols());
    Matrix<F> pw = Matrix<F>::identity(m.rows());
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!field_is_zero(p[k])) out = out + p[k] * pw;
        if (k + 1 < p.size()) pw = pw * m;
    }
    return out;
}

template <typename F>
Morphism<F> poly_eval(const Poly<F>& p, const Morphism<F>& m) {
    Morphism<F> out = Morphism<F>::zero(m.source(), m.target());
    Morphism<F> pw = Morphism<F>::identity(m.source());
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!field_is_zero(p[k])) out = out + p[k] * pw;
        if (k + 1 < p.size()) pw = m * pw;
    }
    return out;
}

/** Evaluate a polynomial on a degree-0 endo cocycle, in coordinates. */
template <typename F>
std::vector<F> poly_eval_cocycle(const TotHom<F>& qq, const Poly<F>& p, const std::vector<F>& phi) {
    std::size_t n = qq.dim(0);
    // identity cocycle
    std::vector<F> id(n, F(0));
    {
        const ProjComplex<F>& q = qq.source();
        for (int deg = q.min_deg; deg <= q.max_deg; ++deg) {
            if (qq.block_dim(0, deg) == 0) continue;
            auto vals = q.term_at(deg).generators_of(Morphism<F>::identity(q.term_at(deg).module()));
            for (std::size_t r = 0; r < vals.size(); ++r) id[qq.offset(0, deg) + r] = vals[r];
        }
    }
    std::vector<F> out(n, F(0)), pw = id;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!field_is_zero(p[k]))
            for (std::size_t i = 0; i < n; ++i) out[i] += p[k] * pw[i];
        if (k + 1 < p.size()) pw = compose_endo_cocycles(qq, 0, phi, 0, pw);
    }
    return out;
}

}  // namespace wdx::homalg
