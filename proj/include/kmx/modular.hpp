#pragma once

#include <cstddef>
#include <vector>

#include "kmx/cyclo.hpp"
#include "kmx/disc.hpp"
#include "kmx/exactlin.hpp"

namespace kmx {

/// Exact scalar base^{half_exponent/2} with positive integer base.
struct HalfPowerScalar {
    Int base = 1;
    long half_exponent = 0;

    HalfPowerScalar() = default;
    HalfPowerScalar(Int b, long h) : base(std::move(b)), half_exponent(h) {}

    HalfPowerScalar operator*(const HalfPowerScalar& rhs) const;
    /// Value equality across representations: b1^{h1} == b2^{h2} as exact
    /// rationals (both values are positive reals).
    bool equals_value(const HalfPowerScalar& rhs) const;
    /// The square of the value as an exact rational.
    Rat value_squared() const;
    double approx() const;
};

/// A genus-g label: one group element per handle.
using Label = std::vector<Element>;

inline constexpr std::size_t kDefaultLabelCap = 10000;

/// Genus-g modular data in the Bohr-Sommerfeld basis: labels in
/// lexicographic order with the vacuum tuple first, diagonal Dehn-twist
/// phases, the Omega phase kernel, and the exact |G|^{-g/2} normalization.
struct ModularData {
    DiscGroup group;
    unsigned genus = 1;
    std::vector<Label> labels;
    std::vector<Phase> t_diag;                // prod_j q_K(u_j)
    std::vector<std::vector<Phase>> omega;    // prod_j Omega_K(u_j, v_j)
    HalfPowerScalar norm;                     // (|G|, -g)
};

/// dim H = |G|^g = |det K|^g. Guarded only against absurd result sizes.
Int state_space_dimension(const DiscGroup& g, unsigned genus);

/// Labels + t_diag (no Omega kernel materialized).
ModularData t_matrix(const DiscGroup& g, unsigned genus,
                     std::size_t label_cap = kDefaultLabelCap);

/// Complete modular data: labels, t_diag, Omega kernel, normalization.
ModularData s_matrix(const DiscGroup& g, unsigned genus,
                     std::size_t label_cap = kDefaultLabelCap);

/// Entry oracles for data past the materialization cap.
Phase s_entry(const DiscGroup& g, const Label& u, const Label& v);
Phase t_entry(const DiscGroup& g, const Label& u);

/// |det K|^{g/2}, the cylinder normalization at genus g.
HalfPowerScalar cylinder_factor(const DiscGroup& g, unsigned genus);

/// Certifies S S^dagger = I without evaluating sqrt|G|: for every nonzero
/// difference label d the CycloSum over the materialized row of d must be
/// exactly zero, and the vacuum row must sum to |G|^g.
bool verify_s_unitary(const ModularData& data);

struct ModularRelationsReport {
    bool s2_is_charge_conjugation = false;
    bool st_cubed_matches = false;
};

inline constexpr std::size_t kRelationsCap = 64;

/// Genus-1 diagnostic (the source construction does not assert these):
/// S^2 = C and (ST)^3 = e^{2*pi*i*c/8} S^2 C, checked as exact CycloSum
/// identities with the Gauss sum standing in for sqrt|G| e^{2*pi*i*sigma/8}.
/// The C on the right is forced by the kernel convention S entries = Omega
/// (not its conjugate); for that convention (ST)^3 is a pure phase times
/// the identity.
ModularRelationsReport verify_modular_relations(const ModularData& data, int c_mod8);

}  // namespace kmx
