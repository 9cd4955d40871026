#include <doctest.h>

#include "kmx/maslov.hpp"
#include "kmx/randgen.hpp"
#include "testutil.hpp"

using namespace kmx;
using kmxtest::a2;
using kmxtest::mat;

namespace {

LagrangianSubspace line(const SymplecticSpace& v, long x, long y) {
    RatMatrix b(2, 1);
    b.at(0, 0) = x;
    b.at(1, 0) = y;
    return LagrangianSubspace(v, b);
}

}  // namespace

TEST_SUITE_BEGIN("maslov");

TEST_CASE("lagrangian recognition") {
    SymplecticSpace r2 = SymplecticSpace::standard(1);
    RatMatrix e1(2, 1);
    e1.at(0, 0) = 1;
    CHECK(is_lagrangian(r2, e1));
    CHECK(!is_lagrangian(r2, RatMatrix::identity(2)));  // wrong dimension

    SymplecticSpace r4 = SymplecticSpace::standard(2);
    RatMatrix positions(4, 2);
    positions.at(0, 0) = 1;
    positions.at(1, 1) = 1;
    CHECK(is_lagrangian(r4, positions));
    RatMatrix mixed(4, 2);  // span(e1, e3): omega(e1,e3) = 1
    mixed.at(0, 0) = 1;
    mixed.at(2, 1) = 1;
    CHECK(!is_lagrangian(r4, mixed));
    RatMatrix degenerate(4, 2);  // rank 1
    degenerate.at(0, 0) = 1;
    degenerate.at(0, 1) = 2;
    CHECK(!is_lagrangian(r4, degenerate));
    CHECK_THROWS_AS(LagrangianSubspace(r4, mixed), NotLagrangianError);
}

TEST_CASE("the worked plane triple") {
    SymplecticSpace v = SymplecticSpace::standard(1);
    LagrangianSubspace l1 = line(v, 1, 0);
    LagrangianSubspace l2 = line(v, 0, 1);
    LagrangianSubspace l3 = line(v, 1, 1);
    CHECK(kashiwara_index(v, l1, l2, l3) == -1);
    CHECK(kashiwara_index(v, l2, l1, l3) == 1);
    CHECK(kashiwara_index(v, l1, l1, l1) == 0);
    CHECK(kashiwara_index(v, l1, l2, l2) == 0);

    CHECK(mu_k(validate_k_matrix(a2()), v, l1, l2, l3) == -2);
    CHECK(mu_k(validate_k_matrix(hyperbolic_u()), v, l1, l2, l3) == 0);
    for (long k = 2; k <= 8; k += 2)
        CHECK(mu_k(validate_k_matrix(mat({{k}})), v, l1, l2, l3) == -1);
}

TEST_CASE("alternating under transpositions") {
    Rng rng(51);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
        SymplecticSpace v = SymplecticSpace::standard(m);
        LagrangianSubspace a(v, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace b(v, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace c(v, random_lagrangian_basis(rng, m, 4));
        long mu = kashiwara_index(v, a, b, c);
        CHECK(kashiwara_index(v, b, a, c) == -mu);
        CHECK(kashiwara_index(v, a, c, b) == -mu);
        CHECK(kashiwara_index(v, c, b, a) == -mu);
        CHECK(kashiwara_index(v, b, c, a) == mu);
        CHECK(kashiwara_index(v, c, a, b) == mu);
    }
}

TEST_CASE("cocycle identity on random quadruples") {
    Rng rng(52);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
        SymplecticSpace v = SymplecticSpace::standard(m);
        LagrangianSubspace a(v, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace b(v, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace c(v, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace d(v, random_lagrangian_basis(rng, m, 4));
        long sum = kashiwara_index(v, a, b, c) - kashiwara_index(v, a, b, d) +
                   kashiwara_index(v, a, c, d) - kashiwara_index(v, b, c, d);
        CHECK(sum == 0);
    }
}

TEST_CASE("additivity under direct sums") {
    Rng rng(53);
    for (int t = 0; t < 50; ++t) {
        std::size_t m1 = static_cast<std::size_t>(rng.uniform(1, 2));
        std::size_t m2 = static_cast<std::size_t>(rng.uniform(1, 2));
        SymplecticSpace v1 = SymplecticSpace::standard(m1);
        SymplecticSpace v2 = SymplecticSpace::standard(m2);
        RatMatrix a1 = random_lagrangian_basis(rng, m1, 4);
        RatMatrix b1 = random_lagrangian_basis(rng, m1, 4);
        RatMatrix c1 = random_lagrangian_basis(rng, m1, 4);
        RatMatrix a2b = random_lagrangian_basis(rng, m2, 4);
        RatMatrix b2 = random_lagrangian_basis(rng, m2, 4);
        RatMatrix c2 = random_lagrangian_basis(rng, m2, 4);

        // Block-diagonal sum of the two symplectic spaces and bases.
        std::size_t d1 = 2 * m1, d2 = 2 * m2;
        RatMatrix form(d1 + d2, d1 + d2);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) form.at(i, j) = v1.form().at(i, j);
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d2; ++j) form.at(d1 + i, d1 + j) = v2.form().at(i, j);
        SymplecticSpace sum_space(form);
        auto stack = [&](const RatMatrix& x, const RatMatrix& y) {
            RatMatrix out(d1 + d2, m1 + m2);
            for (std::size_t i = 0; i < d1; ++i)
                for (std::size_t j = 0; j < m1; ++j) out.at(i, j) = x.at(i, j);
            for (std::size_t i = 0; i < d2; ++i)
                for (std::size_t j = 0; j < m2; ++j) out.at(d1 + i, m1 + j) = y.at(i, j);
            return out;
        };
        long want = kashiwara_index(v1, LagrangianSubspace(v1, a1), LagrangianSubspace(v1, b1),
                                    LagrangianSubspace(v1, c1)) +
                    kashiwara_index(v2, LagrangianSubspace(v2, a2b), LagrangianSubspace(v2, b2),
                                    LagrangianSubspace(v2, c2));
        long got = kashiwara_index(sum_space, LagrangianSubspace(sum_space, stack(a1, a2b)),
                                   LagrangianSubspace(sum_space, stack(b1, b2)),
                                   LagrangianSubspace(sum_space, stack(c1, c2)));
        CHECK(got == want);
    }
}

TEST_CASE("mu_k routes agree on random inputs") {
    Rng rng(54);
    for (int t = 0; t < 60; ++t) {
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
        SymplecticSpace v = SymplecticSpace::standard(m);
        LagrangianSubspace a(v, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace b(v, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace c(v, random_lagrangian_basis(rng, m, 4));
        KMatrix k = random_k_matrix(rng, 3, Int(100));
        // mu_k throws InternalMismatch if the scaling and tensor routes split.
        CHECK(mu_k(k, v, a, b, c) == k.signature() * kashiwara_index(v, a, b, c));
    }
}

TEST_CASE("bks cocycle phase") {
    CHECK(bks_cocycle_phase(0).is_one());
    CHECK(bks_cocycle_phase(-2) == Phase::from_exponent(3, 2));  // -i
    CHECK(bks_cocycle_phase(8).is_one());                        // mod-8 weight
    CHECK(bks_cocycle_phase(1) == Phase::from_exponent(1, 4));
}

TEST_SUITE_END();
