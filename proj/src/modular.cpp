#include "kmx/modular.hpp"

#include <cmath>
#include <string>

namespace kmx {

HalfPowerScalar HalfPowerScalar::operator*(const HalfPowerScalar& rhs) const {
    if (base == rhs.base) return {base, half_exponent + rhs.half_exponent};
    if (rhs.base == 1 || rhs.half_exponent == 0) return *this;
    if (base == 1 || half_exponent == 0) return rhs;
    throw DimensionMismatchError("half-power product requires a common base");
}

Rat HalfPowerScalar::value_squared() const {
    Int p;
    unsigned long e = static_cast<unsigned long>(
        half_exponent < 0 ? -half_exponent : half_exponent);
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return half_exponent < 0 ? Rat(1) / Rat(p) : Rat(p);
}

bool HalfPowerScalar::equals_value(const HalfPowerScalar& rhs) const {
    return value_squared() == rhs.value_squared();
}

double HalfPowerScalar::approx() const {
    return std::pow(base.get_d(), static_cast<double>(half_exponent) / 2.0);
}

namespace {

Int pow_int(const Int& b, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

std::vector<Label> build_labels(const DiscGroup& g, unsigned genus, std::size_t cap) {
    if (genus == 0) return {Label{}};
    Int total = pow_int(g.order(), genus);
    if (total > static_cast<unsigned long>(cap))
        throw CapacityError("label count " + total.get_str() + " exceeds cap " +
                            std::to_string(cap));
    std::vector<Element> elems = g.enumerate(cap);
    std::vector<Label> labels;
    std::size_t count = static_cast<std::size_t>(total.get_ui());
    labels.reserve(count);
    std::vector<std::size_t> idx(genus, 0);
    for (std::size_t c = 0; c < count; ++c) {
        Label lab(genus);
        for (unsigned j = 0; j < genus; ++j) lab[j] = elems[idx[j]];
        labels.push_back(std::move(lab));
        for (unsigned j = genus; j-- > 0;) {
            if (++idx[j] < elems.size()) break;
            idx[j] = 0;
        }
    }
    return labels;
}

}  // namespace

Int state_space_dimension(const DiscGroup& g, unsigned genus) {
    // |G|^g is a pure number; refuse only absurd sizes.
    if (g.order() > 1 && mpz_sizeinbase(g.order().get_mpz_t(), 2) * genus > (1u << 20))
        throw CapacityError("state-space dimension exceeds 2^20 bits");
    return pow_int(g.order(), genus);
}

ModularData t_matrix(const DiscGroup& g, unsigned genus, std::size_t label_cap) {
    ModularData data{g, genus, build_labels(g, genus, label_cap), {}, {}, {}};
    data.norm = HalfPowerScalar(g.order(), -static_cast<long>(genus));
    data.t_diag.reserve(data.labels.size());
    for (const Label& lab : data.labels) data.t_diag.push_back(t_entry(g, lab));
    return data;
}

ModularData s_matrix(const DiscGroup& g, unsigned genus, std::size_t label_cap) {
    ModularData data = t_matrix(g, genus, label_cap);
    std::size_t count = data.labels.size();
    if (genus == 0) {
        data.omega.assign(count, std::vector<Phase>(count));
        return data;
    }
    // Genus-1 pairings, then products per tuple; keeps the work at
    // |G|^2 + |G|^{2g} phase multiplications.
    std::vector<Element> elems = g.enumerate(label_cap);
    std::vector<std::vector<Phase>> pair(elems.size(), std::vector<Phase>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a; b < elems.size(); ++b) {
            pair[a][b] = g.bicharacter(elems[a], elems[b]);
            pair[b][a] = pair[a][b];
        }
    data.omega.assign(count, std::vector<Phase>(count));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            Phase p;
            for (unsigned h = 0; h < genus; ++h)
                p = p * pair[g.index_of(data.labels[i][h])][g.index_of(data.labels[j][h])];
            data.omega[i][j] = p;
        }
    return data;
}

Phase s_entry(const DiscGroup& g, const Label& u, const Label& v) {
    if (u.size() != v.size()) throw DimensionMismatchError("label genus mismatch");
    Phase p;
    for (std::size_t j = 0; j < u.size(); ++j) p = p * g.bicharacter(u[j], v[j]);
    return p;
}

Phase t_entry(const DiscGroup& g, const Label& u) {
    Phase p;
    for (const Element& e : u) p = p * g.q_form(e);
    return p;
}

HalfPowerScalar cylinder_factor(const DiscGroup& g, unsigned genus) {
    // m_{Sigma x I} = (1/4) dim H^1(Sigma) = g/2, so the factor is |det K|^{g/2}.
    return HalfPowerScalar(g.k().abs_det(), static_cast<long>(genus));
}

bool verify_s_unitary(const ModularData& data) {
    if (data.omega.empty()) throw DimensionMismatchError("omega kernel not materialized");
    const DiscGroup& g = data.group;
    std::size_t count = data.labels.size();
    Int total = pow_int(g.order(), data.genus);
    for (std::size_t r = 0; r < count; ++r) {
        CycloSum row_sum;
        for (std::size_t v = 0; v < count; ++v)
            row_sum = row_sum + CycloSum::from_phase(data.omega[r][v]);
        bool vacuum_row = true;
        for (const Element& e : data.labels[r])
            if (!e.is_zero()) vacuum_row = false;
        if (vacuum_row) {
            if (!row_sum.equals(CycloSum::from_integer(total))) return false;
        } else {
            if (!row_sum.is_zero()) return false;
        }
    }
    return true;
}

ModularRelationsReport verify_modular_relations(const ModularData& data, int c_mod8) {
    if (data.genus != 1)
        throw DimensionMismatchError("modular relations are a genus-1 diagnostic");
    if (data.omega.empty() || data.t_diag.empty())
        throw DimensionMismatchError("relations need both S and T data");
    const DiscGroup& g = data.group;
    if (g.order() > static_cast<unsigned long>(kRelationsCap))
        throw CapacityError("relations diagnostic capped at |G| <= " +
                            std::to_string(kRelationsCap));

    std::size_t n = data.labels.size();
    std::vector<Element> elems(n);
    for (std::size_t i = 0; i < n; ++i) elems[i] = data.labels[i][0];
    auto conj_index = [&](std::size_t i) { return g.index_of(g.neg(elems[i])); };

    ModularRelationsReport rep;

    // S^2 entries: |G|^{-1} Sigma_v Omega(u,v) Omega(v,z) must be the
    // charge-conjugation permutation, i.e. the sum is |G| iff z = -u, else 0.
    rep.s2_is_charge_conjugation = true;
    for (std::size_t u = 0; u < n && rep.s2_is_charge_conjugation; ++u)
        for (std::size_t z = 0; z < n && rep.s2_is_charge_conjugation; ++z) {
            CycloSum acc;
            for (std::size_t v = 0; v < n; ++v)
                acc = acc + CycloSum::from_phase(data.omega[u][v] * data.omega[v][z]);
            CycloSum expect = (conj_index(u) == z) ? CycloSum::from_integer(g.order())
                                                   : CycloSum();
            if (!acc.equals(expect)) rep.s2_is_charge_conjugation = false;
        }

    // With the kernel convention S = |G|^{-g/2} Omega (no conjugate), the
    // twist relation reads (ST)^3 = e^{2*pi*i*c/8} S^2 C = e^{2*pi*i*c/8} Id.
    // Clearing |G|^{3/2} via the Gauss sum, each entry must equal
    // |G| * GaussSum * e^{2*pi*i*(c - sigma)/8} * delta_{u,z}.
    CycloSum gauss;
    for (std::size_t v = 0; v < n; ++v)
        gauss = gauss + CycloSum::from_phase(data.t_diag[v]);
    long sigma = g.k().signature();
    Phase adjust = Phase::from_exponent(Rat(Int(c_mod8) - Int(sigma), Int(4)));
    CycloSum rhs_diag = (gauss * g.order()) * CycloSum::from_phase(adjust);

    rep.st_cubed_matches = true;
    for (std::size_t u = 0; u < n && rep.st_cubed_matches; ++u)
        for (std::size_t z = 0; z < n && rep.st_cubed_matches; ++z) {
            CycloSum acc;
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w) {
                    Phase p = data.omega[u][v] * data.t_diag[v] * data.omega[v][w] *
                              data.t_diag[w] * data.omega[w][z] * data.t_diag[z];
                    acc = acc + CycloSum::from_phase(p);
                }
            CycloSum expect = (u == z) ? rhs_diag : CycloSum();
            if (!acc.equals(expect)) rep.st_cubed_matches = false;
        }
    return rep;
}

}  // namespace kmx
