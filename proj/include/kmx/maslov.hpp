#pragma once

#include <cstddef>

#include "kmx/cyclo.hpp"
#include "kmx/exactlin.hpp"

namespace kmx {

/// Exact symplectic vector space of dimension 2m: an antisymmetric
/// nonsingular rational form. Default is the standard block form
/// [[0, I], [-I, 0]].
class SymplecticSpace {
public:
    explicit SymplecticSpace(RatMatrix form);
    static SymplecticSpace standard(std::size_t m);

    std::size_t dim() const { return form_.rows(); }
    std::size_t half_dim() const { return form_.rows() / 2; }
    const RatMatrix& form() const { return form_; }

    /// omega(x, y) for coordinate vectors given as column matrices.
    Rat pairing(const RatMatrix& x, const RatMatrix& y) const;

private:
    RatMatrix form_;
};

/// Half-dimensional isotropic subspace, stored as a 2m x m basis matrix
/// (columns span the subspace).
class LagrangianSubspace {
public:
    /// Validates rank m and isotropy against the ambient form.
    LagrangianSubspace(const SymplecticSpace& space, RatMatrix basis);

    const RatMatrix& basis() const { return basis_; }

private:
    RatMatrix basis_;
};

/// True iff the columns span a Lagrangian: rank = m and all pairwise
/// omega-products vanish.
bool is_lagrangian(const SymplecticSpace& space, const RatMatrix& basis);

/// Kashiwara-Maslov index of a Lagrangian triple: the signature of
/// Q(x1,x2,x3) = omega(x1,x2) + omega(x2,x3) + omega(x3,x1) on
/// L1 (+) L2 (+) L3, computed exactly. Degenerate directions are discarded.
long kashiwara_index(const SymplecticSpace& space, const LagrangianSubspace& l1,
                     const LagrangianSubspace& l2, const LagrangianSubspace& l3);

/// The toral index mu_K = sigma(K) * mu_Sigma, computed along two routes
/// (scaling, and the direct index on the tensor space (V (x) R^r, omega (x) K))
/// and asserted equal.
long mu_k(const KMatrix& k, const SymplecticSpace& space, const LagrangianSubspace& l1,
          const LagrangianSubspace& l2, const LagrangianSubspace& l3);

/// e^{(i*pi/4) mu}, the projective defect of BKS composition.
Phase bks_cocycle_phase(long mu);

}  // namespace kmx
