#include <cmath>

#include <doctest.h>

#include "kmx/cyclo.hpp"
#include "kmx/randgen.hpp"

using namespace kmx;

namespace {
Phase ph(long n, long d) { return Phase::from_exponent(n, d); }

unsigned long totient(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}
}  // namespace

TEST_SUITE_BEGIN("cyclo");

TEST_CASE("phase canonical form and arithmetic") {
    CHECK(ph(2, 3) * ph(2, 3) == ph(4, 3));
    CHECK(ph(1, 2).pow(4) == ph(0, 1));
    CHECK(ph(8, 3) == ph(2, 3));  // exp(i*pi*8/3) canonicalizes to exp(2*pi*i/3)
    CHECK(ph(-1, 2) == ph(3, 2));
    CHECK(ph(0, 1).is_one());
    CHECK(ph(2, 3).inverse() == ph(4, 3));
    CHECK(ph(1, 2).order() == 4);
    CHECK(ph(2, 3).order() == 3);
}

TEST_CASE("phase serialization round-trips canonically") {
    CHECK(ph(2, 3).str() == "2/3");
    CHECK(ph(0, 5).str() == "0/1");
    CHECK(Phase::parse("2/3") == ph(2, 3));
    CHECK(Phase::parse("-1/2") == ph(3, 2));
    CHECK_THROWS_AS(Phase::parse("1"), ParseError);
    CHECK_THROWS_AS(Phase::parse("x/y"), ParseError);
}

TEST_CASE("phase multiplication is associative and commutative") {
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
        Phase a = ph(rng.uniform(0, 40), rng.uniform(1, 20));
        Phase b = ph(rng.uniform(0, 40), rng.uniform(1, 20));
        Phase c = ph(rng.uniform(0, 40), rng.uniform(1, 20));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        long den = b.exponent().get_den().get_si();
        CHECK(b.pow(2 * den).is_one());
    }
}

TEST_CASE("cyclotomic polynomials: the small table") {
    CHECK(cyclotomic_polynomial(1) == IntPoly::from_coeffs({Int(-1), Int(1)}));
    CHECK(cyclotomic_polynomial(4) == IntPoly::from_coeffs({Int(1), Int(0), Int(1)}));
    CHECK(cyclotomic_polynomial(6) == IntPoly::from_coeffs({Int(1), Int(-1), Int(1)}));
}

TEST_CASE("product of cyclotomics over divisors is x^n - 1") {
    for (unsigned n = 1; n <= 200; ++n) {
        IntPoly prod = IntPoly::from_coeffs({Int(1)});
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
        IntPoly expect = IntPoly::monomial(n, Int(1)) - IntPoly::from_coeffs({Int(1)});
        CHECK(prod == expect);
        CHECK(cyclotomic_polynomial(n).degree() == totient(n));
    }
}

TEST_CASE("cyclosum zero testing") {
    CycloSum cube_roots;
    cube_roots.add_phase(ph(0, 1));
    cube_roots.add_phase(ph(2, 3));
    cube_roots.add_phase(ph(4, 3));
    CHECK(cube_roots.is_zero());

    CycloSum partial;
    partial.add_phase(ph(0, 1));
    partial.add_phase(ph(2, 3));
    CHECK(!partial.is_zero());

    CHECK(CycloSum().is_zero());
    CHECK((cube_roots * partial).is_zero());

    CycloSum cancel;
    cancel.add_phase(ph(1, 2), Int(5));
    cancel.add_phase(ph(1, 2), Int(-5));
    CHECK(cancel.is_zero());
}

TEST_CASE("cyclosum arithmetic matches float evaluation") {
    Rng rng(22);
    for (int t = 0; t < 1000; ++t) {
        CycloSum s;
        long den = rng.uniform(1, 60);
        int terms = static_cast<int>(rng.uniform(1, 8));
        for (int i = 0; i < terms; ++i)
            s.add_phase(ph(rng.uniform(0, 2 * den - 1), den), Int(rng.uniform(-10, 10)));
        auto [re, im] = s.approx();
        bool nearly_zero = std::sqrt(re * re + im * im) < 1e-9;
        CHECK(s.is_zero() == nearly_zero);
    }
}

TEST_CASE("approx values") {
    CycloSum one = CycloSum::from_integer(Int(1));
    auto [re1, im1] = one.approx();
    CHECK(re1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(im1 == doctest::Approx(0.0).epsilon(1e-12));

    CycloSum one_plus_i;
    one_plus_i.add_phase(ph(0, 1));
    one_plus_i.add_phase(ph(1, 2));
    auto [re2, im2] = one_plus_i.approx();
    CHECK(re2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(im2 == doctest::Approx(1.0).epsilon(1e-12));

    // (1+i)/sqrt(2) has magnitude 1.
    double mag = std::hypot(re2, im2) / std::sqrt(2.0);
    CHECK(mag == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("modulus cap is enforced") {
    CycloSum s;
    CHECK_THROWS_AS(s.add_phase(ph(1, 200001), Int(1)), CapacityError);
}

TEST_SUITE_END();
