#include "kmx/maslov.hpp"

#include <string>

namespace kmx {

SymplecticSpace::SymplecticSpace(RatMatrix form) : form_(std::move(form)) {
    if (!form_.square() || form_.rows() % 2 != 0)
        throw DimensionMismatchError("symplectic form must be square of even dimension");
    if (!form_.is_antisymmetric())
        throw DimensionMismatchError("symplectic form must be antisymmetric");
    if (form_.rank() != form_.rows())
        throw SingularMatrixError("symplectic form is degenerate");
}

SymplecticSpace SymplecticSpace::standard(std::size_t m) {
    RatMatrix j(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        j.at(i, m + i) = 1;
        j.at(m + i, i) = -1;
    }
    return SymplecticSpace(std::move(j));
}

Rat SymplecticSpace::pairing(const RatMatrix& x, const RatMatrix& y) const {
    return (x.transpose() * form_ * y).at(0, 0);
}

bool is_lagrangian(const SymplecticSpace& space, const RatMatrix& basis) {
    if (basis.rows() != space.dim())
        throw DimensionMismatchError("basis vectors do not live in the ambient space");
    if (basis.cols() != space.half_dim()) return false;
    if (basis.rank() != space.half_dim()) return false;
    RatMatrix gram = basis.transpose() * space.form() * basis;
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (gram.at(i, j) != 0) return false;
    return true;
}

LagrangianSubspace::LagrangianSubspace(const SymplecticSpace& space, RatMatrix basis)
    : basis_(std::move(basis)) {
    if (!is_lagrangian(space, basis_))
        throw NotLagrangianError();
}

namespace {

// Signature of Q(x1,x2,x3) = w(x1,x2) + w(x2,x3) + w(x3,x1) restricted to
// the column spans of b1, b2, b3 against the antisymmetric form w.
long triple_index(const RatMatrix& w, const RatMatrix& b1, const RatMatrix& b2,
                  const RatMatrix& b3) {
    RatMatrix a12 = b1.transpose() * w * b2;
    RatMatrix a23 = b2.transpose() * w * b3;
    RatMatrix a31 = b3.transpose() * w * b1;
    std::size_t m1 = b1.cols(), m2 = b2.cols(), m3 = b3.cols();
    std::size_t n = m1 + m2 + m3;
    // Gram matrix of 2Q (scaling does not move the signature).
    RatMatrix gram(n, n);
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m2; ++j) {
            gram.at(i, m1 + j) = a12.at(i, j);
            gram.at(m1 + j, i) = a12.at(i, j);
        }
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m3; ++j) {
            gram.at(m1 + i, m1 + m2 + j) = a23.at(i, j);
            gram.at(m1 + m2 + j, m1 + i) = a23.at(i, j);
        }
    for (std::size_t i = 0; i < m3; ++i)
        for (std::size_t j = 0; j < m1; ++j) {
            gram.at(m1 + m2 + i, j) = a31.at(i, j);
            gram.at(j, m1 + m2 + i) = a31.at(i, j);
        }
    return signature(gram).signature();
}

}  // namespace

long kashiwara_index(const SymplecticSpace& space, const LagrangianSubspace& l1,
                     const LagrangianSubspace& l2, const LagrangianSubspace& l3) {
    return triple_index(space.form(), l1.basis(), l2.basis(), l3.basis());
}

long mu_k(const KMatrix& k, const SymplecticSpace& space, const LagrangianSubspace& l1,
          const LagrangianSubspace& l2, const LagrangianSubspace& l3) {
    long mu_sigma = kashiwara_index(space, l1, l2, l3);
    long scaled = k.signature() * mu_sigma;

    // Direct route: the index of L_i (x) R^r in (V (x) R^r, omega (x) K).
    RatMatrix wk = kronecker(space.form(), RatMatrix::from_int(k.matrix()));
    RatMatrix idr = RatMatrix::identity(k.dim());
    long direct = triple_index(wk, kronecker(l1.basis(), idr), kronecker(l2.basis(), idr),
                               kronecker(l3.basis(), idr));
    if (scaled != direct)
        throw InternalMismatchError("mu_K routes disagree: sigma(K)*mu = " +
                                    std::to_string(scaled) + ", tensor index = " +
                                    std::to_string(direct));
    return scaled;
}

Phase bks_cocycle_phase(long mu) {
    return Phase::from_exponent(Rat(mu, 4));
}

}  // namespace kmx
