#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kmx/disc.hpp"
#include "kmx/modular.hpp"

namespace kmx {

/// Finite quadratic theory rebuilt from genus-one (S,T) operators: an
/// addition table on the label set with the vacuum index, the twist values
/// from the T diagonal, and the braiding kernel from S.
struct ReconstructedTheory {
    std::size_t order = 0;
    std::size_t vacuum = 0;
    std::vector<std::vector<std::size_t>> add;   // group table on label indices
    std::vector<Phase> q;
    std::vector<std::vector<Phase>> omega;

    std::size_t add_at(std::size_t a, std::size_t b) const { return add[a][b]; }
    std::size_t neg_of(std::size_t a) const;
    Int label_order(std::size_t a) const;
};

/// Rebuild (G, q, Omega) from the S phase kernel, its positive vacuum
/// normalization, and the T diagonal. Fails loudly if the rows are not a
/// character group closed under multiplication.
ReconstructedTheory reconstruct(const std::vector<std::vector<Phase>>& s_phases,
                                const HalfPowerScalar& norm,
                                const std::vector<Phase>& t_diag);

/// Re-checks the polarization identity q(a+b) = q(a) q(b) Omega(a,b) on all
/// pairs; throws PolarizationViolation on the first failure.
void validate_theory(const ReconstructedTheory& th);

/// Necessary invariants for measurable equivalence: equal fingerprints are
/// necessary (not sufficient) for K ~ K'.
struct Fingerprint {
    std::vector<Int> invariant_factors;                 // sorted (divisibility chain)
    std::vector<std::pair<Int, Phase>> order_q_pairs;   // sorted multiset
    int sigma_mod8 = 0;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint invariant_fingerprint(const KMatrix& k,
                                  std::size_t cap = kDefaultElementCap);

/// Group isomorphism recorded by the images of the source's canonical
/// generators in target canonical coordinates.
struct Isomorphism {
    std::vector<Int> source_factors;
    std::vector<Int> target_factors;
    std::vector<std::vector<Int>> generator_images;  // [i] = coords of phi(g_i)
};

enum class InequivalenceReason { GroupMismatch, CentralChargeMismatch, QMismatch };

std::string to_string(InequivalenceReason r);

struct EquivalenceResult {
    std::optional<Isomorphism> phi;
    std::optional<InequivalenceReason> reason;

    bool equivalent() const { return phi.has_value(); }
};

inline constexpr std::size_t kDefaultEquivCap = 10000;

/// Decides equivalence at the level of measurable data: a group isomorphism
/// preserving q pointwise together with sigma(K1) = sigma(K2) mod 8. The
/// witness is deterministic (generators by decreasing order, images in lex
/// order) and is re-verified on every element plus the S/T conjugation
/// identities before being returned.
EquivalenceResult measurable_equivalent(const KMatrix& k1, const KMatrix& k2,
                                        std::size_t cap = kDefaultEquivCap);

/// Round-trip matcher: an isomorphism from the discriminant group onto the
/// reconstructed theory's label set preserving addition and q, as a label
/// permutation indexed by the group's enumeration order. Empty if none.
std::optional<std::vector<std::size_t>> match_reconstruction(
    const ReconstructedTheory& th, const DiscGroup& g,
    std::size_t cap = kDefaultEquivCap);

}  // namespace kmx
