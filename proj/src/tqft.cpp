#include "kmx/tqft.hpp"

namespace kmx {

namespace {
Rat quarter(const Int& num) {
    Rat r(num, Int(4));
    r.canonicalize();
    return r;
}
}  // namespace

Rat m_exponent(const BettiData& b) {
    return quarter(Int(b.h1) + Int(b.h1_rel) - Int(b.h0) - Int(b.h0_rel));
}

Rat m_closed(long b1) {
    Rat r(Int(b1) - 1, Int(2));
    r.canonicalize();
    return r;
}

bool exponent_identity_check(const GluingData& d) {
    Rat lhs = m_exponent(d.x_cut) + quarter(Int(d.h1_sigma)) +
              quarter(2 * Int(d.dim_lambda_cap_c)) - quarter(Int(d.h1_boundary_cut));
    return lhs == m_exponent(d.x);
}

HalfPowerScalar z_s3(const KMatrix& k) {
    return HalfPowerScalar(k.abs_det(), -1);
}

}  // namespace kmx
