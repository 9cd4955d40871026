#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "kmx/errors.hpp"

namespace kmx {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix of arbitrary-precision integers. No floating point is used
/// anywhere in this module; SNF intermediates can exceed any fixed width.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    // Dimension of a square matrix.
    std::size_t dim() const { return rows_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_symmetric() const;
    bool is_zero() const;

    /// Exact determinant via fraction-free (Bareiss) elimination. Square only.
    Int determinant() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Dense matrix of reduced rationals (mpq keeps denominators positive and
/// entries canonical).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix transpose() const;
    RatMatrix operator-() const;
    bool operator==(const RatMatrix& rhs) const = default;

    bool is_symmetric() const;
    bool is_antisymmetric() const;

    /// Rank by exact Gaussian elimination (first-nonzero pivot rule).
    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// A = U * D * V with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_n,
/// all d_i > 0 for nonsingular input.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

struct SignatureTriple {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    long signature() const {
        return static_cast<long>(n_plus) - static_cast<long>(n_minus);
    }
    bool operator==(const SignatureTriple&) const = default;
};

/// Smith normal form of a nonsingular square integer matrix. Pivot rule:
/// smallest absolute nonzero value in the remaining block, ties broken
/// row-major, so the decomposition is deterministic.
SnfDecomposition smith_normal_form(const IntMatrix& a);

/// Exact inverse of a nonsingular integer matrix.
RatMatrix rational_inverse(const IntMatrix& a);

/// Exact inverse of a nonsingular rational matrix.
RatMatrix rational_inverse(const RatMatrix& a);

/// Signature of a symmetric rational matrix by congruence diagonalization.
/// A zero diagonal pivot whose remaining block has all-zero diagonal is
/// consumed as a hyperbolic 2x2 block contributing (1,1,0).
SignatureTriple signature(const RatMatrix& m);

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

inline constexpr std::size_t kDefaultDimCap = 32;

/// Validated even integral nondegenerate symmetric matrix with cached
/// determinant, SNF and signature.
class KMatrix {
public:
    static KMatrix validate(const IntMatrix& a, std::size_t dim_cap = kDefaultDimCap);

    const IntMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.dim(); }
    const Int& det() const { return det_; }
    Int abs_det() const { return abs(det_); }
    const SnfDecomposition& snf() const { return snf_; }
    const SignatureTriple& sig() const { return sig_; }
    long signature() const { return sig_.signature(); }
    /// K^{-1}, cached; every quadratic-form evaluation reads it.
    const RatMatrix& inverse() const { return inv_; }

private:
    KMatrix(IntMatrix m, Int det, SnfDecomposition snf, SignatureTriple sig, RatMatrix inv)
        : m_(std::move(m)), det_(std::move(det)), snf_(std::move(snf)),
          sig_(std::move(sig)), inv_(std::move(inv)) {}

    IntMatrix m_;
    Int det_;
    SnfDecomposition snf_;
    SignatureTriple sig_;
    RatMatrix inv_;
};

KMatrix validate_k_matrix(const IntMatrix& a, std::size_t dim_cap = kDefaultDimCap);

}  // namespace kmx
