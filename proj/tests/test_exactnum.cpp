#include "wdx/matrix.hpp"
#include "wdx/qmonomial.hpp"
#include "wdx/subspace.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wdx;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng));
    return m;
}

}  // namespace

TEST_CASE("kernel of identity is trivial") {
    QMatrix id = QMatrix::identity(3);
    REQUIRE(id.kernel_basis().empty());
}

TEST_CASE("kernel of zero map is everything") {
    QMatrix z(2, 3);
    auto k = z.kernel_basis();
    REQUIRE(k.size() == 3);
    REQUIRE(QSubspace::span_vectors(3, k) == QSubspace::full(3));
}

TEST_CASE("kernel of a 2x2 Jordan block") {
    QMatrix j(2, 2);
    j(0, 1) = 1;  // J_2(0): e1 -> e0
    auto k = j.kernel_basis();
    REQUIRE(k.size() == 1);
    REQUIRE(k[0][0] == 1);
    REQUIRE(k[0][1] == 0);
}

TEST_CASE("rank-nullity and solve on random matrices") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t r = 1 + iter % 5, c = 1 + (iter * 7) % 6;
        QMatrix m = random_matrix(rng, r, c);
        REQUIRE(m.rank() + m.nullity() == c);

        // b in the image: solve must succeed and reproduce b
        std::vector<Rational> x(c);
        std::uniform_int_distribution<int> d(-3, 3);
        for (auto& v : x) v = Rational(d(rng));
        auto b = m.apply(x);
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        REQUIRE(m.apply(*sol) == b);

        // b outside the image: solve must fail
        QSubspace img = QSubspace::image(m);
        if (img.dim() < r) {
            std::vector<Rational> out(r, Rational(0));
            bool found = false;
            for (std::size_t i = 0; i < r && !found; ++i) {
                out.assign(r, Rational(0));
                out[i] = 1;
                if (!img.contains(out)) found = true;
            }
            REQUIRE(found);
            REQUIRE(!m.solve(out).has_value());
        }
    }
}

TEST_CASE("subspace intersection dimension formula") {
    std::mt19937_64 rng(999);
    SECTION("A cap A = A, complementary lines meet in zero") {
        QMatrix v(1, 2);
        v(0, 0) = 1;
        QSubspace a = QSubspace::span(v);
        REQUIRE(intersect(a, a) == a);
        QMatrix w(1, 2);
        w(0, 1) = 1;
        QSubspace b = QSubspace::span(w);
        REQUIRE(intersect(a, b).dim() == 0);
    }
    SECTION("two generic planes in dim 3 meet in a line, checked by dimension count") {
        for (int iter = 0; iter < 30; ++iter) {
            QSubspace a = QSubspace::span(random_matrix(rng, 2, 3));
            QSubspace b = QSubspace::span(random_matrix(rng, 2, 3));
            QSubspace cap = intersect(a, b);
            QSubspace sum = a + b;
            REQUIRE(cap.dim() + sum.dim() == a.dim() + b.dim());
            REQUIRE(a.contains(cap));
            REQUIRE(b.contains(cap));
            if (a.dim() == 2 && b.dim() == 2 && sum.dim() == 3) REQUIRE(cap.dim() == 1);
        }
    }
}

TEST_CASE("ambient mismatch is rejected") {
    QSubspace a(2), b(3);
    REQUIRE_THROWS_AS(intersect(a, b), std::invalid_argument);
}

TEST_CASE("q-monomial group laws") {
    QMonomial a(Rational(1), 2), b(Rational(1), -2);
    REQUIRE(a * b == QMonomial::one());
    REQUIRE(QMonomial(Rational(-1), 1).pow(2) == QMonomial(Rational(1), 2));
    REQUIRE(QMonomial(Rational(2), 3) * QMonomial(Rational(1, 2), -1) == QMonomial(Rational(1), 2));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dm(-5, 5), dc(1, 9);
    for (int i = 0; i < 100; ++i) {
        QMonomial x(Rational(dc(rng)), dm(rng)), y(Rational(dc(rng), dc(rng)), dm(rng)), z(Rational(-dc(rng)), dm(rng));
        REQUIRE(x * y == y * x);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * x.inverse() == QMonomial::one());
    }
}

TEST_CASE("q-monomial rejects zero coefficient") {
    REQUIRE_THROWS_AS(QMonomial(Rational(0), 1), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
    Fp a(3, 7), b(5, 7);
    REQUIRE((a * b).str() == "1");
    REQUIRE((a + b).str() == "1");
    REQUIRE((a / b).str() == "2");  // 3 * 5^{-1} = 3*3 = 9 = 2 (mod 7)
    REQUIRE_THROWS_AS(Fp(0, 7).inverse(), std::domain_error);

    Matrix<Fp> m(2, 2);
    m(0, 0) = Fp(1, 5);
    m(0, 1) = Fp(2, 5);
    m(1, 0) = Fp(3, 5);
    m(1, 1) = Fp(4, 5);
    REQUIRE(m.rank() == 2);
    m(1, 1) = Fp(6, 5);  // second row now 3,1 = 3*(1,2) mod 5
    REQUIRE(m.rank() == 1);
}

TEST_CASE("field spec validates characteristic") {
    REQUIRE_NOTHROW(FieldSpec::prime_field(7));
    REQUIRE_THROWS_AS(FieldSpec::prime_field(6), std::invalid_argument);
    REQUIRE(FieldSpec::rationals().is_rationals());
}
