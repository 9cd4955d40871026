#pragma once

#include <cstdint>
#include <random>

#include "kmx/exactlin.hpp"
#include "kmx/maslov.hpp"

namespace kmx {

/// Deterministic generator for test corpora; a fixed seed reproduces the
/// same matrices on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

private:
    std::mt19937_64 eng_;
};

/// Random even symmetric integer matrix (diagonal entries doubled).
IntMatrix random_even_symmetric(Rng& rng, std::size_t n, long bound);

/// Random valid K-matrix with dim <= max_dim and 0 < |det| <= max_abs_det.
KMatrix random_k_matrix(Rng& rng, std::size_t max_dim, const Int& max_abs_det);

/// Product of elementary row operations applied to the identity; |det| = 1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, unsigned ops);

/// Random element of Sp(2m, Z) as a product of elementary symplectic
/// factors, so image Lagrangians are exact by construction.
RatMatrix random_symplectic(Rng& rng, std::size_t m, unsigned steps);

/// Random rational Lagrangian basis in the standard space of dimension 2m:
/// a random symplectic image of span(e_1..e_m), columns rescaled by random
/// positive rationals.
RatMatrix random_lagrangian_basis(Rng& rng, std::size_t m, unsigned steps);

/// The E8 Cartan matrix (even, unimodular, signature 8).
IntMatrix e8_cartan();

/// The hyperbolic plane [[0,1],[1,0]].
IntMatrix hyperbolic_u();

}  // namespace kmx
