#pragma once

#include "kmx/exactlin.hpp"
#include "kmx/modular.hpp"

namespace kmx {

/// Real cohomology dimensions of a compact oriented 3-manifold with
/// boundary, supplied by the caller (the library does no topology).
struct BettiData {
    long h1 = 0;       // dim H^1(X;R)
    long h1_rel = 0;   // dim H^1(X, dX;R)
    long h0 = 0;       // dim H^0(X;R)
    long h0_rel = 0;   // dim H^0(X, dX;R)

    bool operator==(const BettiData&) const = default;
};

/// Data of a cutting X^cut ~> X along Sigma.
struct GluingData {
    BettiData x;
    BettiData x_cut;
    long h1_sigma = 0;         // dim H^1(Sigma;R)
    long h1_boundary_cut = 0;  // dim H^1(dX^cut;R)
    long dim_lambda_cap_c = 0; // dim(Lambda_{X^cut} n C)

    bool operator==(const GluingData&) const = default;
};

/// m_X = (1/4)(h1 + h1_rel - h0 - h0_rel).
Rat m_exponent(const BettiData& b);

/// Closed connected case: m_X = (b1 - 1)/2.
Rat m_closed(long b1);

/// m_{X^cut} + (1/4) dim H^1(Sigma) + (1/2) dim(Lambda n C)
///   - (1/4) dim H^1(dX^cut)  ==  m_X, as exact rationals.
bool exponent_identity_check(const GluingData& d);

/// Z(S^3) = |det K|^{-1/2}.
HalfPowerScalar z_s3(const KMatrix& k);

}  // namespace kmx
