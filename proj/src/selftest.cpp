#include <functional>
#include <ostream>
#include <vector>

#include "kmx/cli.hpp"
#include "kmx/randgen.hpp"

namespace kmx::cli {

namespace {

struct Suite {
    int checks = 0;
    int failures = 0;

    void expect(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
};

IntMatrix a2_matrix() {
    return IntMatrix::from_rows(std::vector<std::vector<long>>{{2, 1}, {1, 2}});
}

Phase ph(long num, long den) { return Phase::from_exponent(num, den); }

void suite_golden(Suite& s) {
    KMatrix k = validate_k_matrix(a2_matrix());
    s.expect(k.det() == 3);
    s.expect(k.signature() == 2);
    DiscGroup g(k);
    s.expect(g.invariant_factors() == std::vector<Int>{Int(3)});
    std::vector<Element> elems = g.enumerate();
    s.expect(elems.size() == 3);
    s.expect(g.q_form(elems[0]) == ph(0, 1));
    s.expect(g.q_form(elems[1]) == ph(2, 3));
    s.expect(g.q_form(elems[2]) == ph(2, 3));

    ModularData md = s_matrix(g, 1);
    const Phase w = ph(2, 3), w2 = ph(4, 3), one = ph(0, 1);
    std::vector<std::vector<Phase>> expected{
        {one, one, one}, {one, w2, w}, {one, w, w2}};
    s.expect(md.omega == expected);
    s.expect(md.t_diag == (std::vector<Phase>{one, w, w}));
    s.expect(md.norm.base == 3 && md.norm.half_exponent == -1);
    for (unsigned gen = 0; gen <= 5; ++gen) {
        Int want;
        mpz_ui_pow_ui(want.get_mpz_t(), 3, gen);
        s.expect(state_space_dimension(g, gen) == want);
    }
    HalfPowerScalar cyl = cylinder_factor(g, 1);
    s.expect(cyl.base == 3 && cyl.half_exponent == 1);
    HalfPowerScalar zs3 = z_s3(k);
    s.expect(zs3.base == 3 && zs3.half_exponent == -1);
    s.expect(m_exponent(BettiData{1, 0, 1, 0}) == 0);
    s.expect(m_closed(0) == Rat(-1, 2));
    s.expect(gauss_milgram(g).verified);
    s.expect(central_charge_mod8(k) == 2);

    ReconstructedTheory th = reconstruct(md.omega, md.norm, md.t_diag);
    s.expect(th.order == 3);
    s.expect(match_reconstruction(th, g).has_value());
    ModularRelationsReport rel = verify_modular_relations(md, 2);
    s.expect(rel.s2_is_charge_conjugation);
    s.expect(rel.st_cubed_matches);
}

void suite_exactlin(Suite& s) {
    Rng rng(101);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng.uniform(-9, 9);
        if (a.determinant() == 0) continue;
        SnfDecomposition snf = smith_normal_form(a);
        s.expect(snf.u * snf.d * snf.v == a);
        Int prod = 1;
        bool chain = true;
        for (std::size_t i = 0; i < n; ++i) {
            prod *= snf.d.at(i, i);
            if (i + 1 < n && snf.d.at(i + 1, i + 1) % snf.d.at(i, i) != 0) chain = false;
        }
        s.expect(chain);
        s.expect(prod == abs(a.determinant()));
    }
    for (int t = 0; t < 10; ++t) {
        KMatrix k = random_k_matrix(rng, 4, Int(200));
        IntMatrix p = random_unimodular(rng, k.dim(), 6);
        IntMatrix conj = p.transpose() * k.matrix() * p;
        s.expect(signature(RatMatrix::from_int(conj)) == k.sig());
    }
}

void suite_cyclo(Suite& s) {
    for (unsigned n = 1; n <= 40; ++n) {
        IntPoly prod = IntPoly::from_coeffs({Int(1)});
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
        IntPoly xn1 = IntPoly::monomial(n, Int(1)) - IntPoly::from_coeffs({Int(1)});
        s.expect(prod == xn1);
    }
    Rng rng(202);
    for (int t = 0; t < 100; ++t) {
        CycloSum acc;
        long den = rng.uniform(1, 24);
        for (int i = 0; i < 6; ++i)
            acc.add_phase(ph(rng.uniform(0, 2 * den - 1), den), Int(rng.uniform(-10, 10)));
        auto [re, im] = acc.approx();
        bool nearly_zero = re * re + im * im < 1e-18;
        s.expect(acc.is_zero() == nearly_zero);
    }
}

void suite_disc(Suite& s) {
    Rng rng(303);
    for (int t = 0; t < 100; ++t) {
        KMatrix k = random_k_matrix(rng, 4, Int(200));
        DiscGroup g(k);
        std::vector<Int> x(k.dim()), lam(k.dim());
        for (std::size_t i = 0; i < k.dim(); ++i) {
            x[i] = rng.uniform(-20, 20);
            lam[i] = rng.uniform(-5, 5);
        }
        std::vector<Int> shifted = x;
        for (std::size_t i = 0; i < k.dim(); ++i)
            for (std::size_t j = 0; j < k.dim(); ++j)
                shifted[i] += k.matrix().at(i, j) * lam[j];
        s.expect(g.project(x) == g.project(shifted));
        s.expect(g.q_form(g.project(x)) == g.q_form(g.project(shifted)));
    }
    for (int t = 0; t < 15; ++t) {
        KMatrix k = random_k_matrix(rng, 4, Int(120));
        s.expect(gauss_milgram(DiscGroup(k)).verified);
    }
}

void suite_modular(Suite& s) {
    Rng rng(404);
    for (int t = 0; t < 12; ++t) {
        KMatrix k = random_k_matrix(rng, 3, Int(40));
        DiscGroup g(k);
        s.expect(verify_s_unitary(s_matrix(g, 1)));
    }
    KMatrix k = validate_k_matrix(a2_matrix());
    DiscGroup g(k);
    s.expect(verify_s_unitary(s_matrix(g, 2)));
    // Corrupting one kernel entry must break the certificate.
    ModularData bad = s_matrix(g, 1);
    bad.omega[1][2] = bad.omega[1][2] * ph(1, 1);
    s.expect(!verify_s_unitary(bad));
}

void suite_maslov(Suite& s) {
    SymplecticSpace v = SymplecticSpace::standard(1);
    RatMatrix b1(2, 1), b2(2, 1), b3(2, 1);
    b1.at(0, 0) = 1;
    b2.at(1, 0) = 1;
    b3.at(0, 0) = 1;
    b3.at(1, 0) = 1;
    LagrangianSubspace l1(v, b1), l2(v, b2), l3(v, b3);
    s.expect(kashiwara_index(v, l1, l2, l3) == -1);
    s.expect(mu_k(validate_k_matrix(a2_matrix()), v, l1, l2, l3) == -2);

    Rng rng(505);
    for (int t = 0; t < 30; ++t) {
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
        SymplecticSpace space = SymplecticSpace::standard(m);
        LagrangianSubspace a(space, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace b(space, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace c(space, random_lagrangian_basis(rng, m, 4));
        LagrangianSubspace d(space, random_lagrangian_basis(rng, m, 4));
        long m123 = kashiwara_index(space, a, b, c);
        s.expect(kashiwara_index(space, b, a, c) == -m123);
        long coc = m123 - kashiwara_index(space, a, b, d) +
                   kashiwara_index(space, a, c, d) - kashiwara_index(space, b, c, d);
        s.expect(coc == 0);
    }
}

void suite_classify(Suite& s) {
    Rng rng(606);
    for (int t = 0; t < 8; ++t) {
        KMatrix k = random_k_matrix(rng, 3, Int(40));
        DiscGroup g(k);
        ModularData md = s_matrix(g, 1);
        ReconstructedTheory th = reconstruct(md.omega, md.norm, md.t_diag);
        s.expect(match_reconstruction(th, g).has_value());
    }
    KMatrix a2 = validate_k_matrix(a2_matrix());
    KMatrix a2m = validate_k_matrix(
        IntMatrix::from_rows(std::vector<std::vector<long>>{{-2, -1}, {-1, -2}}));
    s.expect(measurable_equivalent(a2, a2).equivalent());
    EquivalenceResult res = measurable_equivalent(a2, a2m);
    s.expect(!res.equivalent() &&
             *res.reason == InequivalenceReason::CentralChargeMismatch);
    KMatrix stab = validate_k_matrix(block_diag(a2_matrix(), hyperbolic_u()));
    s.expect(measurable_equivalent(a2, stab).equivalent());
}

void suite_tqft(Suite& s) {
    s.expect(m_exponent(BettiData{1, 0, 1, 0}) == 0);
    for (long g = 0; g <= 4; ++g) {
        Rat half_g(g, 2);
        half_g.canonicalize();
        s.expect(m_exponent(BettiData{2 * g, 1, 1, 0}) == half_g);
    }
    s.expect(m_closed(0) == Rat(-1, 2));
    s.expect(m_closed(3) == 1);
    GluingData d;
    d.x = BettiData{0, 0, 1, 1};      // S^3
    d.x_cut = BettiData{2, 0, 2, 0};  // two solid tori
    d.h1_sigma = 2;
    d.h1_boundary_cut = 4;
    d.dim_lambda_cap_c = 0;
    s.expect(exponent_identity_check(d));
    d.h1_sigma += 1;
    s.expect(!exponent_identity_check(d));
}

}  // namespace

int run_selftest(std::ostream& out) {
    struct Entry {
        const char* name;
        std::function<void(Suite&)> fn;
    };
    const std::vector<Entry> suites = {
        {"golden_coupled_rank_two", suite_golden},
        {"exactlin_properties", suite_exactlin},
        {"cyclo_properties", suite_cyclo},
        {"disc_properties", suite_disc},
        {"modular_properties", suite_modular},
        {"maslov_properties", suite_maslov},
        {"classify_properties", suite_classify},
        {"tqft_properties", suite_tqft},
    };
    int total_failures = 0;
    for (const Entry& e : suites) {
        Suite s;
        e.fn(s);
        total_failures += s.failures;
        out << (s.failures ? "FAIL" : "ok  ") << "  " << e.name << ": "
            << (s.checks - s.failures) << "/" << s.checks << " checks passed\n";
    }
    out << (total_failures ? "SELFTEST FAILED\n" : "selftest passed\n");
    return total_failures == 0 ? kExitOk : 1;
}

}  // namespace kmx::cli
