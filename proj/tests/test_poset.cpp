#include "wdx/homalg/poset.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wdx;
using namespace wdx::homalg;

using R = Rational;

namespace {

/** Random poset on n elements with a least element 0 and a maximum, via a random DAG. */
Poset random_poset_with_max(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> rel;
    std::uniform_int_distribution<int> coin(0, 2);
    for (int a = 1; a < n - 1; ++a)
        for (int b = a + 1; b < n - 1; ++b)
            if (coin(rng) == 0) rel.push_back({a, b});
    for (int a = 1; a < n; ++a) rel.push_back({0, a});      // least element
    for (int a = 0; a < n - 1; ++a) rel.push_back({a, n - 1});  // maximum
    return Poset(n, std::move(rel));
}

}  // namespace

TEST_CASE("poset sanity") {
    Poset p(3, {{0, 1}, {1, 2}});
    REQUIRE(p.le(0, 2));  // transitive closure
    REQUIRE(p.least() == 0);
    REQUIRE(p.maximum_excluding(0) == 2);
    REQUIRE_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("constant chain complex on P(E) is acyclic unless E is empty") {
    for (int n = 1; n <= 6; ++n) {
        auto sys = SimplexSystem<R>::constant(n, 1);
        sys.validate();
        auto cx = simplex_chain_complex(sys);
        REQUIRE(cx.is_acyclic());
    }
    SECTION("E empty: homology is the coefficients in degree 0") {
        auto sys = SimplexSystem<R>::constant(0, 3);
        auto cx = simplex_chain_complex(sys);
        REQUIRE(cx.homology_dims() == std::vector<std::size_t>({3}));
    }
    SECTION("higher-dimensional constant coefficients") {
        auto sys = SimplexSystem<R>::constant(4, 3);
        REQUIRE(simplex_chain_complex(sys).is_acyclic());
    }
}

TEST_CASE("a nonconstant simplex system can have homology") {
    // V(mask) = Q for full set only, zero elsewhere: kills exactness
    SimplexSystem<R> sys;
    sys.n = 2;
    sys.dims = {0, 0, 0, 1};
    for (int mask = 0; mask < 4; ++mask)
        for (int e = 0; e < 2; ++e)
            if (mask >> e & 1)
                sys.maps[{mask, e}] = Matrix<R>(sys.dims[(std::size_t)(mask ^ (1 << e))], sys.dims[(std::size_t)mask]);
    sys.validate();
    auto cx = simplex_chain_complex(sys);
    REQUIRE(!cx.is_acyclic());
}

TEST_CASE("augmented poset cochain complex") {
    SECTION("small hand case: chain 0 < 1 < 2") {
        auto sys = PosetSystem<R>::constant(Poset(3, {{0, 1}, {1, 2}}), 1);
        sys.validate();
        auto cx = poset_cochain_complex(sys);
        // degrees -1..1: dims 1, 2, 1
        REQUIRE(cx.min_deg == -1);
        REQUIRE(cx.dims == std::vector<std::size_t>({1, 2, 1}));
        REQUIRE(cx.is_acyclic());
    }
    SECTION("no least element is rejected") {
        auto sys = PosetSystem<R>::constant(Poset(2, {}), 1);
        REQUIRE_THROWS_AS(poset_cochain_complex(sys), std::invalid_argument);
    }
    SECTION("constant system on 100 random posets with a maximum: acyclic") {
        std::mt19937_64 rng(2718);
        std::uniform_int_distribution<int> nn(3, 7);
        for (int iter = 0; iter < 100; ++iter) {
            Poset p = random_poset_with_max(rng, nn(rng));
            auto sys = PosetSystem<R>::constant(p, 1);
            sys.validate();
            auto cx = poset_cochain_complex(sys);
            REQUIRE(cx.is_acyclic());
        }
    }
    SECTION("an antichain above the least element is not acyclic") {
        // star with two points: nerve is two points, augmented complex has H^0
        auto sys = PosetSystem<R>::constant(Poset(3, {{0, 1}, {0, 2}}), 1);
        auto cx = poset_cochain_complex(sys);
        REQUIRE(!cx.is_acyclic());
    }
}
