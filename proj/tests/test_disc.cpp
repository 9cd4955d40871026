#include <cmath>

#include <doctest.h>

#include "kmx/disc.hpp"
#include "kmx/randgen.hpp"
#include "testutil.hpp"

using namespace kmx;
using kmxtest::a2;
using kmxtest::mat;

namespace {
Phase ph(long n, long d) { return Phase::from_exponent(n, d); }
}

TEST_SUITE_BEGIN("disc");

TEST_CASE("discriminant groups of the worked examples") {
    DiscGroup g(validate_k_matrix(a2()));
    CHECK(g.invariant_factors() == std::vector<Int>{Int(3)});
    CHECK(g.order() == 3);

    DiscGroup e8(validate_k_matrix(e8_cartan()));
    CHECK(e8.invariant_factors().empty());
    CHECK(e8.order() == 1);
    CHECK(e8.enumerate() == std::vector<Element>{Element{}});

    DiscGroup z2(validate_k_matrix(mat({{2}})));
    CHECK(z2.invariant_factors() == std::vector<Int>{Int(2)});
}

TEST_CASE("projection and lift") {
    DiscGroup g(validate_k_matrix(a2()));
    Element gen = g.project({Int(1), Int(1)});
    CHECK(g.element_order(gen) == 3);
    CHECK(!gen.is_zero());

    // Lattice vectors project to the vacuum: K*(5,-7) and (3,3) = K*(1,1).
    CHECK(g.project({Int(2 * 5 + 1 * -7), Int(1 * 5 + 2 * -7)}).is_zero());
    CHECK(g.project({Int(3), Int(3)}).is_zero());

    for (const Element& e : g.enumerate()) CHECK(g.project(g.lift(e)) == e);
    CHECK_THROWS_AS(g.project({Int(1)}), DimensionMismatchError);
}

TEST_CASE("quadratic form values of the coupled rank-two example") {
    DiscGroup g(validate_k_matrix(a2()));
    std::vector<Element> elems = g.enumerate();
    CHECK(g.q_form(elems[0]) == ph(0, 1));
    CHECK(g.q_form(elems[1]) == ph(2, 3));
    CHECK(g.q_form(elems[2]) == ph(2, 3));

    DiscGroup z2(validate_k_matrix(mat({{2}})));
    CHECK(z2.q_form(z2.generator(0)) == ph(1, 2));
    CHECK(z2.q_form(z2.zero()).is_one());
}

TEST_CASE("bicharacter matrix of the coupled rank-two example") {
    DiscGroup g(validate_k_matrix(a2()));
    std::vector<Element> e = g.enumerate();
    const Phase one = ph(0, 1), w = ph(2, 3), w2 = ph(4, 3);
    Phase m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = g.bicharacter(e[i], e[j]);
    CHECK(m[0][0] == one);
    CHECK(m[0][1] == one);
    CHECK(m[0][2] == one);
    CHECK(m[1][1] == w2);
    CHECK(m[1][2] == w);
    CHECK(m[2][1] == w);
    CHECK(m[2][2] == w2);

    DiscGroup z2(validate_k_matrix(mat({{2}})));
    CHECK(z2.bicharacter(z2.generator(0), z2.generator(0)) == ph(1, 1));
}

TEST_CASE("enumeration order and capacity") {
    DiscGroup g4(validate_k_matrix(mat({{0, 2}, {2, 0}})));
    CHECK(g4.invariant_factors() == std::vector<Int>{Int(2), Int(2)});
    std::vector<Element> elems = g4.enumerate();
    REQUIRE(elems.size() == 4);
    CHECK(elems[0].is_zero());
    for (std::size_t i = 1; i < elems.size(); ++i) CHECK(elems[i - 1] < elems[i]);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        CHECK(g4.index_of(elems[i]) == i);
        CHECK(g4.element_at(i) == elems[i]);
    }
    CHECK_THROWS_AS(g4.enumerate(3), CapacityError);
}

TEST_CASE("well-definedness of q under lift shifts") {
    Rng rng(31);
    for (int t = 0; t < 500; ++t) {
        KMatrix k = random_k_matrix(rng, 4, Int(200));
        DiscGroup g(k);
        std::vector<Int> x(k.dim()), lam(k.dim());
        for (auto& xi : x) xi = rng.uniform(-30, 30);
        for (auto& li : lam) li = rng.uniform(-5, 5);
        std::vector<Int> shifted = x;
        for (std::size_t i = 0; i < k.dim(); ++i)
            for (std::size_t j = 0; j < k.dim(); ++j)
                shifted[i] += k.matrix().at(i, j) * lam[j];
        CHECK(g.q_form(g.project(x)) == g.q_form(g.project(shifted)));
    }
}

TEST_CASE("omega is nondegenerate, symmetric, and polarizes q") {
    Rng rng(32);
    for (int t = 0; t < 12; ++t) {
        KMatrix k = random_k_matrix(rng, 3, Int(60));
        DiscGroup g(k);
        std::vector<Element> elems = g.enumerate(500);
        for (const Element& u : elems) {
            CHECK(g.bicharacter(u, g.zero()).is_one());
            bool pairs_nontrivially = u.is_zero();
            for (const Element& v : elems) {
                CHECK(g.bicharacter(u, v) == g.bicharacter(v, u));
                CHECK(g.bicharacter(u, v) == g.bicharacter_polarized(u, v));
                if (!g.bicharacter(u, v).is_one()) pairs_nontrivially = true;
            }
            CHECK(pairs_nontrivially);
        }
    }
}

TEST_CASE("character orthogonality: row sums vanish away from the vacuum") {
    Rng rng(33);
    for (int t = 0; t < 8; ++t) {
        KMatrix k = random_k_matrix(rng, 3, Int(40));
        DiscGroup g(k);
        std::vector<Element> elems = g.enumerate();
        for (const Element& u : elems) {
            CycloSum sum;
            for (const Element& v : elems) sum = sum + CycloSum::from_phase(g.bicharacter(u, v));
            CHECK(sum.is_zero() == !u.is_zero());
        }
    }
}

TEST_CASE("gauss sum certificate for the worked examples") {
    // K=[2]: 1 + i = sqrt(2) e^{i*pi/4}; float route first.
    DiscGroup z2(validate_k_matrix(mat({{2}})));
    GaussMilgramResult gm = gauss_milgram(z2);
    auto [re, im] = gm.sum.approx();
    CHECK(std::hypot(re - 1.0, im - 1.0) < 1e-12);
    CHECK(gm.sigma_mod8 == 1);
    CHECK(gm.verified);

    DiscGroup e8(validate_k_matrix(e8_cartan()));
    GaussMilgramResult gm8 = gauss_milgram(e8);
    CHECK(gm8.sigma_mod8 == 0);
    CHECK(gm8.verified);

    // Coupled rank-two: sum = 1 + 2w, square must be -3 = 3 e^{i*pi}.
    DiscGroup a2g(validate_k_matrix(a2()));
    GaussMilgramResult gma = gauss_milgram(a2g);
    auto [re2, im2] = (gma.sum * gma.sum).approx();
    CHECK(std::hypot(re2 + 3.0, im2) < 1e-10);
    CHECK(gma.sigma_mod8 == 2);
    CHECK(gma.verified);
}

TEST_CASE("gauss sum certificate on a random corpus") {
    Rng rng(34);
    for (int t = 0; t < 100; ++t) {
        KMatrix k = random_k_matrix(rng, 4, Int(200));
        CHECK(gauss_milgram(DiscGroup(k)).verified);
    }
}

TEST_CASE("central charge mod 8") {
    CHECK(central_charge_mod8(validate_k_matrix(a2())) == 2);
    CHECK(central_charge_mod8(validate_k_matrix(hyperbolic_u())) == 0);
    CHECK(central_charge_mod8(validate_k_matrix(e8_cartan())) == 0);
    CHECK(central_charge_mod8(validate_k_matrix(mat({{-2, -1}, {-1, -2}}))) == 6);
}

TEST_SUITE_END();
