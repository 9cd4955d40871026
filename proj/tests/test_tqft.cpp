#include <doctest.h>

#include "kmx/json_io.hpp"
#include "kmx/randgen.hpp"
#include "kmx/tqft.hpp"
#include "testutil.hpp"

using namespace kmx;
using kmxtest::a2;
using kmxtest::mat;

namespace {
Rat rat(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Betti data of the cylinder Sigma_g x I: H^1 = H^1(Sigma) and, by
// Lefschetz duality, H^1(X, dX) = H_2(X) = H_2(Sigma) = R.
BettiData cylinder(long g) { return BettiData{2 * g, 1, 1, 0}; }
}  // namespace

TEST_SUITE_BEGIN("tqft");

TEST_CASE("normalization exponents") {
    CHECK(m_exponent(BettiData{1, 0, 1, 0}) == 0);  // solid torus
    for (long g = 0; g <= 5; ++g) CHECK(m_exponent(cylinder(g)) == rat(g, 2));
    CHECK(m_exponent(BettiData{}) == 0);

    CHECK(m_closed(0) == rat(-1, 2));  // S^3
    CHECK(m_closed(3) == 1);           // T^3
    CHECK(m_closed(1) == 0);
}

TEST_CASE("m is additive over disjoint unions") {
    Rng rng(71);
    for (int t = 0; t < 100; ++t) {
        BettiData a{rng.uniform(0, 6), rng.uniform(0, 6), rng.uniform(0, 3), rng.uniform(0, 3)};
        BettiData b{rng.uniform(0, 6), rng.uniform(0, 6), rng.uniform(0, 3), rng.uniform(0, 3)};
        BettiData sum{a.h1 + b.h1, a.h1_rel + b.h1_rel, a.h0 + b.h0, a.h0_rel + b.h0_rel};
        CHECK(m_exponent(sum) == m_exponent(a) + m_exponent(b));
    }
}

TEST_CASE("exponent identity for gluings") {
    // S^3 glued from two solid tori along T^2: m_cut = 0, and
    // 0 + 2/4 + 0/2 - 4/4 = -1/2 = m_{S^3}.
    GluingData d;
    d.x = BettiData{0, 0, 1, 1};
    d.x_cut = BettiData{2, 0, 2, 0};
    d.h1_sigma = 2;
    d.h1_boundary_cut = 4;
    d.dim_lambda_cap_c = 0;
    CHECK(exponent_identity_check(d));

    // A genus-1 cylinder cut into two cylinders.
    GluingData c;
    c.x = cylinder(1);
    c.x_cut = BettiData{4, 2, 2, 0};
    c.h1_sigma = 2;
    c.h1_boundary_cut = 8;
    c.dim_lambda_cap_c = 2;
    CHECK(exponent_identity_check(c));

    // Any single-field perturbation must break it.
    for (int field = 0; field < 7; ++field) {
        GluingData p = d;
        switch (field) {
            case 0: p.x.h1 += 1; break;
            case 1: p.x.h1_rel += 1; break;
            case 2: p.x_cut.h1 += 1; break;
            case 3: p.x_cut.h0 += 1; break;
            case 4: p.h1_sigma += 1; break;
            case 5: p.h1_boundary_cut += 1; break;
            default: p.dim_lambda_cap_c += 1; break;
        }
        CHECK(!exponent_identity_check(p));
    }

    GluingData zero;
    CHECK(exponent_identity_check(zero));
}

TEST_CASE("exponent identity is closed under disjoint-union shifts") {
    // All quantities in the identity are additive over disjoint unions, so
    // componentwise sums of consistent instances stay consistent.
    GluingData s3;
    s3.x = BettiData{0, 0, 1, 1};
    s3.x_cut = BettiData{2, 0, 2, 0};
    s3.h1_sigma = 2;
    s3.h1_boundary_cut = 4;
    s3.dim_lambda_cap_c = 0;
    GluingData cyl;
    cyl.x = cylinder(1);
    cyl.x_cut = BettiData{4, 2, 2, 0};
    cyl.h1_sigma = 2;
    cyl.h1_boundary_cut = 8;
    cyl.dim_lambda_cap_c = 2;
    REQUIRE(exponent_identity_check(s3));
    REQUIRE(exponent_identity_check(cyl));

    auto add_betti = [](const BettiData& a, const BettiData& b) {
        return BettiData{a.h1 + b.h1, a.h1_rel + b.h1_rel, a.h0 + b.h0,
                         a.h0_rel + b.h0_rel};
    };
    GluingData sum;
    sum.x = add_betti(s3.x, cyl.x);
    sum.x_cut = add_betti(s3.x_cut, cyl.x_cut);
    sum.h1_sigma = s3.h1_sigma + cyl.h1_sigma;
    sum.h1_boundary_cut = s3.h1_boundary_cut + cyl.h1_boundary_cut;
    sum.dim_lambda_cap_c = s3.dim_lambda_cap_c + cyl.dim_lambda_cap_c;
    CHECK(exponent_identity_check(sum));

    for (int copies = 2; copies <= 5; ++copies) {
        GluingData scaled;
        scaled.x = BettiData{copies * cyl.x.h1, copies * cyl.x.h1_rel,
                             copies * cyl.x.h0, copies * cyl.x.h0_rel};
        scaled.x_cut = BettiData{copies * cyl.x_cut.h1, copies * cyl.x_cut.h1_rel,
                                 copies * cyl.x_cut.h0, copies * cyl.x_cut.h0_rel};
        scaled.h1_sigma = copies * cyl.h1_sigma;
        scaled.h1_boundary_cut = copies * cyl.h1_boundary_cut;
        scaled.dim_lambda_cap_c = copies * cyl.dim_lambda_cap_c;
        CHECK(exponent_identity_check(scaled));
    }
}

TEST_CASE("betti and gluing records mirror their fields in json") {
    BettiData b{2, 1, 1, 0};
    Json jb = to_json(b);
    CHECK(jb["h1"] == 2);
    CHECK(jb["h1_rel"] == 1);
    CHECK(betti_from_json(jb) == b);

    GluingData d;
    d.x = BettiData{0, 0, 1, 1};
    d.x_cut = BettiData{2, 0, 2, 0};
    d.h1_sigma = 2;
    d.h1_boundary_cut = 4;
    CHECK(gluing_from_json(to_json(d)) == d);
}

TEST_CASE("sphere partition function") {
    HalfPowerScalar z = z_s3(validate_k_matrix(a2()));
    CHECK(z.base == 3);
    CHECK(z.half_exponent == -1);
    CHECK(z.approx() == doctest::Approx(1.0 / std::sqrt(3.0)));

    CHECK(z_s3(validate_k_matrix(e8_cartan())).equals_value(HalfPowerScalar(Int(1), 0)));
    CHECK(z_s3(validate_k_matrix(mat({{6}}))).equals_value(HalfPowerScalar(Int(6), -1)));
}

TEST_SUITE_END();
