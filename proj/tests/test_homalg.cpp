#include "wdx/homalg/splitting.hpp"
#include "wdx/homalg/td.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wdx;
using namespace wdx::homalg;

using R = Rational;
using Mod = AModule<R>;
using Mor = Morphism<R>;
using Cx = BoundedComplex<R>;

namespace {

Mod projective_module(const AlgebraPtr& alg, int v) {
    return ProjModule<R>(alg, std::vector<int>{v}).module();
}

/** Conjugate a module by random invertible vertexwise base changes. */
Mod randomize_module(std::mt19937_64& rng, const Mod& m) {
    std::uniform_int_distribution<int> d(-2, 2);
    const AlgebraPtr& alg = m.algebra();
    std::vector<Matrix<R>> p, pinv;
    for (int v = 0; v < alg->vertices(); ++v) {
        while (true) {
            Matrix<R> cand((std::size_t)m.dim(v), (std::size_t)m.dim(v));
            for (std::size_t i = 0; i < cand.rows(); ++i)
                for (std::size_t j = 0; j < cand.cols(); ++j) cand(i, j) = R(d(rng));
            auto inv = cand.inverse();
            if (inv) {
                p.push_back(cand);
                pinv.push_back(*inv);
                break;
            }
        }
    }
    std::vector<Matrix<R>> maps;
    for (std::size_t a = 0; a < alg->arrows().size(); ++a) {
        const Arrow& ar = alg->arrows()[a];
        maps.push_back(p[(std::size_t)ar.tgt] * m.arrow_map((int)a) * pinv[(std::size_t)ar.src]);
    }
    return Mod(alg, m.dims(), std::move(maps));
}

/** Two-term complex P_{i+1} -> P_{i+2} over the ladder, realizing a generator of Ext^2(S_{i+2}, S_i). */
Cx nonsplit_two_term(const AlgebraPtr& alg, int low_vertex) {
    // resolution of S_{low+2}: 0 -> P_low -> P_{low+1} -> P_{low+2} -> S -> 0
    Mod s = simple_module<R>(alg, low_vertex + 2);
    Resolution<R> r = projective_resolution(s, 2);
    return Cx(alg, 0, {r.terms[1].module(), r.terms[0].module()}, {r.d[1]});
}

}  // namespace

TEST_CASE("algebra construction and finite-dimensionality") {
    REQUIRE(lambda_algebra(4)->dim() == 4 + 3);  // vertices plus arrows, radical square zero
    REQUIRE(truncated_polynomial_algebra(2)->dim() == 2);
    REQUIRE(truncated_polynomial_algebra(4)->dim() == 4);
    REQUIRE(semisimple_algebra(3)->dim() == 3);
    // a free loop is infinite-dimensional
    REQUIRE_THROWS_AS(PresentedAlgebra(1, {{0, 0}}, {}), std::invalid_argument);
    // two loops with one square relation still pump: (xy)^k avoids xx
    REQUIRE_THROWS_AS(PresentedAlgebra(1, {{0, 0}, {0, 0}}, {{0, 0}}), std::invalid_argument);
    // a two-cycle dies against one composite relation: only e0, e1, a, b, ba survive
    REQUIRE(PresentedAlgebra(2, {{0, 1}, {1, 0}}, {{0, 1}}).dim() == 5);
    REQUIRE(PresentedAlgebra(2, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}).dim() == 4);
    // malformed relations
    REQUIRE_THROWS_AS(PresentedAlgebra(2, {{0, 1}}, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(PresentedAlgebra(2, {{0, 1}}, {{0}}), std::invalid_argument);
}

TEST_CASE("relations must annihilate modules") {
    AlgebraPtr a2 = truncated_polynomial_algebra(2);
    Matrix<R> x(2, 2);
    x(0, 1) = 1;
    REQUIRE_NOTHROW(Mod(a2, {2}, {x}));
    Matrix<R> bad(2, 2);
    bad(0, 1) = 1;
    bad(1, 0) = 1;  // squares to the identity
    REQUIRE_THROWS_AS(Mod(a2, {2}, {bad}), std::invalid_argument);
}

TEST_CASE("projective resolutions") {
    SECTION("a projective module resolves in length zero") {
        AlgebraPtr alg = lambda_algebra(3);
        Mod p = projective_module(alg, 2);
        Resolution<R> r = projective_resolution(p, 3);
        REQUIRE(r.terms[0].module().total_dim() == p.total_dim());
        for (int k = 1; k <= 3; ++k) REQUIRE(r.terms[(std::size_t)k].module().total_dim() == 0);
    }
    SECTION("the simple over k[x]/(x^2) resolves periodically") {
        AlgebraPtr alg = truncated_polynomial_algebra(2);
        Resolution<R> r = projective_resolution(simple_module<R>(alg, 0), 5);
        for (int k = 0; k <= 5; ++k) {
            REQUIRE(r.terms[(std::size_t)k].copies() == std::vector<int>{0});
            REQUIRE(r.terms[(std::size_t)k].module().total_dim() == 2);
        }
    }
    SECTION("simples over the ladder: term k is the projective at the vertex k steps down") {
        int d = 5;
        AlgebraPtr alg = lambda_algebra(d);
        Resolution<R> r = projective_resolution(simple_module<R>(alg, d - 1), d - 1);
        for (int k = 0; k <= d - 1; ++k) REQUIRE(r.terms[(std::size_t)k].copies() == std::vector<int>{d - 1 - k});
        // syzygies stay inside the radical: the cover is minimal, so Hom(P^k, S) has zero differential
    }
}

TEST_CASE("ext dimensions") {
    SECTION("Ext^0 of a simple with itself is one-dimensional") {
        AlgebraPtr alg = lambda_algebra(3);
        auto dims = ext_dims(simple_module<R>(alg, 1), simple_module<R>(alg, 1), 3);
        REQUIRE(dims[0] == 1);
        REQUIRE(dims[1] == 0);
    }
    SECTION("ladder pattern: dim Ext^k(S_i, S_j) = [j = i-k] for d <= 5") {
        for (int d = 2; d <= 5; ++d) {
            AlgebraPtr alg = lambda_algebra(d);
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j) {
                    auto dims = ext_dims(simple_module<R>(alg, i - 1), simple_module<R>(alg, j - 1), d);
                    for (int k = 0; k <= d; ++k) REQUIRE(dims[(std::size_t)k] == (j == i - k ? 1u : 0u));
                }
        }
    }
    SECTION("k[x]/(x^2): dim Ext^k(S,S) = 1 for all k") {
        AlgebraPtr alg = truncated_polynomial_algebra(2);
        auto dims = ext_dims(simple_module<R>(alg, 0), simple_module<R>(alg, 0), 6);
        for (auto v : dims) REQUIRE(v == 1);
    }
    SECTION("independence of the resolution: random base change of the source module") {
        std::mt19937_64 rng(777);
        AlgebraPtr alg = lambda_algebra(4);
        Mod m = direct_sum(projective_module(alg, 3), simple_module<R>(alg, 2));
        Mod n = direct_sum(simple_module<R>(alg, 1), simple_module<R>(alg, 2));
        auto base = ext_dims(m, n, 4);
        for (int iter = 0; iter < 5; ++iter) {
            REQUIRE(ext_dims(randomize_module(rng, m), randomize_module(rng, n), 4) == base);
        }
    }
}

TEST_CASE("yoneda composition") {
    int d = 4;
    AlgebraPtr alg = lambda_algebra(d);
    std::vector<Mod> s;
    for (int i = 0; i < d; ++i) s.push_back(simple_module<R>(alg, i));
    std::vector<Resolution<R>> res;
    for (int i = 0; i < d; ++i) res.push_back(projective_resolution(s[(std::size_t)i], d + 1));

    SECTION("identity in Ext^0 acts as the identity") {
        auto id2 = ext_basis(res[2], s[2], 0);
        auto b21 = ext_basis(res[2], s[1], 1);
        REQUIRE(id2.size() == 1);
        REQUIRE(b21.size() == 1);
        auto prod = yoneda_compose(res[2], id2[0], res[2], b21[0], s[1]);
        REQUIRE(!ext_class_is_zero(res[2], s[1], prod));
        // and on the other side
        auto id1 = ext_basis(res[1], s[1], 0);
        auto prod2 = yoneda_compose(res[2], b21[0], res[1], id1[0], s[1]);
        REQUIRE(!ext_class_is_zero(res[2], s[1], prod2));
    }
    SECTION("generators compose to nonzero classes along the whole ladder") {
        // beta_{i-1,i} in Ext^1(S_i, S_{i-1}); iterated products generate Ext^{i-j}(S_i, S_j)
        for (int i = d; i >= 2; --i) {
            ExtElement<R> acc;
            bool first = true;
            for (int j = i; j >= 2; --j) {
                auto gen = ext_basis(res[(std::size_t)j - 1], s[(std::size_t)j - 2], 1);
                REQUIRE(gen.size() == 1);
                if (first) {
                    acc = gen[0];
                    first = false;
                } else {
                    acc = yoneda_compose(res[(std::size_t)i - 1], acc, res[(std::size_t)j - 1], gen[0],
                                         s[(std::size_t)j - 2]);
                }
                REQUIRE(!ext_class_is_zero(res[(std::size_t)i - 1], s[(std::size_t)j - 2], acc));
                REQUIRE(acc.degree == i - j + 1);
            }
        }
    }
    SECTION("composition through a zero ext group vanishes") {
        // Ext^1(S_3, S_2) x Ext^1(S_2, S_3) -> Ext^2(S_3, S_3) = 0
        auto a = ext_basis(res[2], s[1], 1);
        auto dims = ext_dims(s[1], s[2], 2);
        REQUIRE(dims[1] == 0);  // Ext^1(S_2, S_3) = 0: nothing to compose with upward
        // instead: compose beta with itself shifted off the ladder: Ext^1(S_4,S_3) then Ext^2(S_3,S_1) = 0 target
        auto b43 = ext_basis(res[3], s[2], 1);
        auto b32 = ext_basis(res[2], s[1], 1);
        auto c = yoneda_compose(res[3], b43[0], res[2], b32[0], s[1]);
        REQUIRE(!ext_class_is_zero(res[3], s[1], c));
        // the product with a further generator lands in Ext^3(S_4, S_0-like) which exists: go one too far
        auto b21 = ext_basis(res[1], s[0], 1);
        auto e = yoneda_compose(res[3], c, res[1], b21[0], s[0]);
        REQUIRE(!ext_class_is_zero(res[3], s[0], e));
        // beyond the bottom of the ladder every group vanishes
        auto dims2 = ext_dims(s[3], s[0], d + 1);
        REQUIRE(dims2[4] == 0);
    }
}

TEST_CASE("derived endomorphism algebras") {
    SECTION("a single simple in degree zero") {
        AlgebraPtr alg = lambda_algebra(3);
        Cx x = Cx::single(simple_module<R>(alg, 2), 0);
        GradedEnd<R> e = derived_end(x, -2, 2);
        REQUIRE(e.dims == std::vector<std::size_t>({0, 0, 1, 0, 0}));
        REQUIRE(e.table0.size() == 1);
        REQUIRE(e.table0[0][0] == std::vector<R>({R(1)}));
    }
    SECTION("an acyclic complex has zero derived endomorphisms") {
        AlgebraPtr alg = lambda_algebra(2);
        Mod p = projective_module(alg, 1);
        Cx x(alg, 0, {p, p}, {Mor::identity(p)});
        GradedEnd<R> e = derived_end(x, -1, 1);
        REQUIRE(e.dims == std::vector<std::size_t>({0, 0, 0}));
    }
    SECTION("the ladder sum realizes the upper-triangular algebra") {
        for (int d = 2; d <= 4; ++d) {
            TdReport rep = td_realization<R>(d);
            REQUIRE(rep.dim0 == (std::size_t)(d * (d + 1) / 2));
            REQUIRE(rep.dims_match);
            REQUIRE(rep.products_match);
        }
    }
}

TEST_CASE("splitting decisions") {
    SECTION("complexes of semisimple modules split") {
        AlgebraPtr alg = semisimple_algebra(2);
        Mod s0 = simple_module<R>(alg, 0), s1 = simple_module<R>(alg, 1);
        Mod m = direct_sum(s0, s1);
        Cx x(alg, 0, {m, m}, {Mor::identity(m)});
        REQUIRE(scindage_criterion(x).holds);
        REQUIRE(is_splittable(x).splittable);
    }
    SECTION("one nonzero cohomology splits") {
        AlgebraPtr alg = truncated_polynomial_algebra(2);
        Mod a = projective_module(alg, 0);
        Matrix<R> x(2, 2);
        x(0, 1) = 1;
        Mod s = simple_module<R>(alg, 0);
        Cx cx = Cx::single(s, 1);
        REQUIRE(is_splittable(cx).splittable);
    }
    SECTION("the two-term x-multiplication complex over k[x]/(x^2) does not split") {
        AlgebraPtr alg = truncated_polynomial_algebra(2);
        Mod a = projective_module(alg, 0);
        // multiplication by x: sends the generator to x
        Matrix<R> mx(2, 2);
        // basis of P_0: e (trivial path), x; x.e = x, x.x = 0
        mx(1, 0) = 1;
        Mor f(a, a, {mx});
        Cx x(alg, 0, {a, a}, {f});
        auto crit = scindage_criterion(x);
        REQUIRE(!crit.holds);
        auto rep = is_splittable(x);
        REQUIRE(!rep.splittable);
        REQUIRE(!rep.obstruction.holds);
    }
    SECTION("criterion implies splittable over the ladder") {
        AlgebraPtr alg = lambda_algebra(3);
        // H^0 = S_1, H^1 = S_3: Ext^2(S_3, S_1) is nonzero, criterion must fail on the nonsplit complex
        Cx bad = nonsplit_two_term(alg, 0);
        auto dims = bad.cohomology_dims();
        REQUIRE(dims == std::vector<std::size_t>({1, 1}));
        REQUIRE(!scindage_criterion(bad).holds);
        REQUIRE(!is_splittable(bad).splittable);
        // S_1 in degree 0 and S_2 in degree 1: obstruction lives in Ext^2(S_2, S_1) = 0
        Mod s1 = simple_module<R>(alg, 0), s2 = simple_module<R>(alg, 1);
        Cx ok(alg, 0, {s1, s2}, {Mor::zero(s1, s2)});
        REQUIRE(scindage_criterion(ok).holds);
        REQUIRE(is_splittable(ok).splittable);
    }
}

TEST_CASE("polynomial action and the unique conjugating splitting") {
    AlgebraPtr alg = semisimple_algebra(1);
    Mod s = simple_module<R>(alg, 0);
    SECTION("split complex with distinct scalars: the diagonal splitting is found and unique") {
        Cx x(alg, 0, {s, s}, {Mor::zero(s, s)});
        std::vector<Mor> comps{R(2) * Mor::identity(s), R(5) * Mor::identity(s)};
        ChainEndo<R> phi(x, comps);
        std::map<int, Poly<R>> polys{{0, {R(-2), R(1)}}, {1, {R(-5), R(1)}}};
        auto rep = actionphi_split(x, phi, polys);
        REQUIRE(rep.precondition_ok);
        REQUIRE(rep.annihilation);
        REQUIRE(rep.comaximal);
        REQUIRE(rep.split_found);
        REQUIRE(rep.split_unique);
    }
    SECTION("failing precondition is reported") {
        Cx x = Cx::single(s, 0);
        ChainEndo<R> phi(x, {R(3) * Mor::identity(s)});
        std::map<int, Poly<R>> polys{{0, {R(-2), R(1)}}};  // T - 2 does not kill 3
        auto rep = actionphi_split(x, phi, polys);
        REQUIRE(!rep.precondition_ok);
    }
    SECTION("non-comaximal polynomials: annihilation still returned") {
        Cx x(alg, 0, {s, s}, {Mor::zero(s, s)});
        std::vector<Mor> comps{R(2) * Mor::identity(s), R(2) * Mor::identity(s)};
        ChainEndo<R> phi(x, comps);
        std::map<int, Poly<R>> polys{{0, {R(-2), R(1)}}, {1, {R(-2), R(1)}}};
        auto rep = actionphi_split(x, phi, polys);
        REQUIRE(rep.precondition_ok);
        REQUIRE(rep.annihilation);
        REQUIRE(!rep.comaximal);
        REQUIRE(!rep.split_found);
    }
    SECTION("on the nonsplit ladder complex every chain endomorphism acts by one scalar") {
        AlgebraPtr l3 = lambda_algebra(3);
        Cx x = nonsplit_two_term(l3, 0);
        // derived endomorphisms in degree 0: scalars only (End is local), so the
        // scalar actions on H^0 = S_1 and H^1 = S_3 agree and comaximal P_q cannot exist
        GradedEnd<R> e = derived_end(x, 0, 0);
        REQUIRE(e.dims[0] == 1);
        // the identity generates: its actions on both cohomologies are equal scalars
        auto ys = cohomology_sum_complex(x);
        REQUIRE(ys.data[0].h.total_dim() == 1);
        REQUIRE(ys.data[1].h.total_dim() == 1);
        // phi = identity: P_0 = T-1 kills H^0(phi), P_1 = T-1 kills H^1(phi), but they are not coprime
        ChainEndo<R> idphi(x, {Mor::identity(x.term(0)), Mor::identity(x.term(1))});
        std::map<int, Poly<R>> polys{{0, {R(-1), R(1)}}, {1, {R(-1), R(1)}}};
        auto rep = actionphi_split(x, idphi, polys);
        REQUIRE(rep.precondition_ok);
        REQUIRE(rep.annihilation);
        REQUIRE(!rep.comaximal);
    }
    SECTION("nilpotent action: P_q = T^dim gives a null-homotopic P(phi)") {
        AlgebraPtr l2 = lambda_algebra(2);
        Mod s1 = simple_module<R>(l2, 0);
        Mod m = direct_sum(s1, s1);
        Matrix<R> n(2, 2);
        n(0, 1) = 1;
        Mor nil(m, m, {n, Matrix<R>(0, 0)});
        Cx x = Cx::single(m, 0);
        ChainEndo<R> phi(x, {nil});
        std::map<int, Poly<R>> polys{{0, {R(0), R(0), R(1)}}};  // T^2
        auto rep = actionphi_split(x, phi, polys);
        REQUIRE(rep.precondition_ok);
        REQUIRE(rep.annihilation);
    }
}

TEST_CASE("prime field homological test") {
    // the ladder pattern holds over F_5 as well
    AlgebraPtr alg = lambda_algebra(3);
    auto mk = [&](int v) {
        std::vector<int> dims(3, 0);
        dims[v] = 1;
        std::vector<Matrix<Fp>> maps;
        for (auto& a : alg->arrows()) maps.push_back(Matrix<Fp>((std::size_t)dims[a.tgt], (std::size_t)dims[a.src]));
        return AModule<Fp>(alg, dims, maps, false);
    };
    auto dims = ext_dims(mk(2), mk(0), 3);
    REQUIRE(dims == std::vector<std::size_t>({0, 0, 1, 0}));
}
