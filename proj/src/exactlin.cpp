#include "kmx/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace kmx {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatchError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> conv(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        conv[i].assign(rows[i].begin(), rows[i].end());
    return from_rows(conv);
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatchError("matrix product shape");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IntMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

Int IntMatrix::determinant() const {
    if (!square()) throw DimensionMismatchError("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix w = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && w.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatchError("matrix product shape");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = -at(i, j);
    return out;
}

bool RatMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::is_antisymmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

std::size_t RatMatrix::rank() const {
    RatMatrix w = *this;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && w.at(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(row, j), w.at(p, j));
        for (std::size_t i = row + 1; i < rows_; ++i) {
            if (w.at(i, col) == 0) continue;
            Rat f = w.at(i, col) / w.at(row, col);
            for (std::size_t j = col; j < cols_; ++j) w.at(i, j) -= f * w.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

// Working state for SNF: the invariant a = u * w * v is maintained under
// every elementary operation.
struct SnfState {
    IntMatrix w, u, v;

    void row_swap(std::size_t i, std::size_t j) {
        std::size_t n = w.dim();
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(w.at(i, k), w.at(j, k));
            std::swap(u.at(k, i), u.at(k, j));
        }
    }
    void col_swap(std::size_t i, std::size_t j) {
        std::size_t n = w.dim();
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(w.at(k, i), w.at(k, j));
            std::swap(v.at(i, k), v.at(j, k));
        }
    }
    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const Int& q) {
        std::size_t n = w.dim();
        for (std::size_t k = 0; k < n; ++k) {
            w.at(i, k) -= q * w.at(j, k);
            u.at(k, j) += q * u.at(k, i);
        }
    }
    // col_i -= q * col_j
    void col_sub(std::size_t i, std::size_t j, const Int& q) {
        std::size_t n = w.dim();
        for (std::size_t k = 0; k < n; ++k) {
            w.at(k, i) -= q * w.at(k, j);
            v.at(j, k) += q * v.at(i, k);
        }
    }
    void row_negate(std::size_t i) {
        std::size_t n = w.dim();
        for (std::size_t k = 0; k < n; ++k) {
            w.at(i, k) = -w.at(i, k);
            u.at(k, i) = -u.at(k, i);
        }
    }
};

// Smallest absolute nonzero entry in w[t.., t..], row-major tie break.
bool find_pivot(const IntMatrix& w, std::size_t t, std::size_t& pi, std::size_t& pj) {
    std::size_t n = w.dim();
    bool found = false;
    Int best;
    for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
            const Int& x = w.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    if (!a.square()) throw DimensionMismatchError("SNF requires a square matrix");
    std::size_t n = a.dim();
    SnfState s{a, IntMatrix::identity(n), IntMatrix::identity(n)};

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(s.w, t, pi, pj))
            throw SingularMatrixError("SNF input is singular");
        if (pi != t) s.row_swap(t, pi);
        if (pj != t) s.col_swap(t, pj);

        for (;;) {
            // Clear column t below the pivot and row t to its right.
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (s.w.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.w.at(i, t).get_mpz_t(), s.w.at(t, t).get_mpz_t());
                s.row_sub(i, t, q);
                if (s.w.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.w.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.w.at(t, j).get_mpz_t(), s.w.at(t, t).get_mpz_t());
                s.col_sub(j, t, q);
                if (s.w.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                if (!find_pivot(s.w, t, pi, pj))
                    throw SingularMatrixError("SNF input is singular");
                if (pi != t) s.row_swap(t, pi);
                if (pj != t) s.col_swap(t, pj);
                continue;
            }
            // Divisibility fix: pull a non-multiple into the working row.
            bool fixed = true;
            for (std::size_t i = t + 1; i < n && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (s.w.at(i, j) % s.w.at(t, t) != 0) {
                        s.row_sub(t, i, Int(-1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (s.w.at(t, t) < 0) s.row_negate(t);
    }
    return SnfDecomposition{std::move(s.u), std::move(s.w), std::move(s.v)};
}

RatMatrix rational_inverse(const IntMatrix& a) {
    return rational_inverse(RatMatrix::from_int(a));
}

RatMatrix rational_inverse(const RatMatrix& a) {
    if (!a.square()) throw DimensionMismatchError("inverse of non-square matrix");
    std::size_t n = a.rows();
    RatMatrix w = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && w.at(p, col) == 0) ++p;
        if (p == n) throw SingularMatrixError();
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(col, j), w.at(p, j));
                std::swap(inv.at(col, j), inv.at(p, j));
            }
        Rat piv = w.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            w.at(col, j) /= piv;
            inv.at(col, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            Rat f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

SignatureTriple signature(const RatMatrix& m_in) {
    if (!m_in.square()) throw DimensionMismatchError("signature of non-square matrix");
    if (!m_in.is_symmetric()) throw NotSymmetricError();
    RatMatrix m = m_in;
    std::size_t n = m.rows();
    SignatureTriple out;

    auto clear_with_pivot = [&](std::size_t t) {
        for (std::size_t i = t + 1; i < n; ++i) {
            if (m.at(i, t) == 0) continue;
            Rat f = m.at(i, t) / m.at(t, t);
            for (std::size_t j = t; j < n; ++j) m.at(i, j) -= f * m.at(t, j);
            for (std::size_t j = t; j < n; ++j) m.at(j, i) -= f * m.at(j, t);
        }
    };
    auto swap_index = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(m.at(k, i), m.at(k, j));
    };

    std::size_t t = 0;
    while (t < n) {
        if (m.at(t, t) == 0) {
            std::size_t d = t;
            while (d < n && m.at(d, d) == 0) ++d;
            if (d < n) {
                swap_index(t, d);
            } else {
                // All remaining diagonal entries vanish: the first nonzero
                // off-diagonal entry spans a hyperbolic plane.
                bool found = false;
                std::size_t oi = 0, oj = 0;
                for (std::size_t i = t; i < n && !found; ++i)
                    for (std::size_t j = i + 1; j < n && !found; ++j)
                        if (m.at(i, j) != 0) {
                            oi = i;
                            oj = j;
                            found = true;
                        }
                if (!found) {
                    out.n_zero += n - t;
                    break;
                }
                if (oi != t) swap_index(t, oi);
                if (oj != t + 1) swap_index(t + 1, oj);
                const Rat b = m.at(t, t + 1);
                for (std::size_t k = t + 2; k < n; ++k) {
                    Rat fi = m.at(k, t + 1) / b;
                    Rat fj = m.at(k, t) / b;
                    if (fi != 0) {
                        for (std::size_t j = t; j < n; ++j) m.at(k, j) -= fi * m.at(t, j);
                        for (std::size_t j = t; j < n; ++j) m.at(j, k) -= fi * m.at(j, t);
                    }
                    if (fj != 0) {
                        for (std::size_t j = t; j < n; ++j) m.at(k, j) -= fj * m.at(t + 1, j);
                        for (std::size_t j = t; j < n; ++j) m.at(j, k) -= fj * m.at(j, t + 1);
                    }
                }
                out.n_plus += 1;
                out.n_minus += 1;
                t += 2;
                continue;
            }
        }
        if (m.at(t, t) > 0)
            out.n_plus += 1;
        else
            out.n_minus += 1;
        clear_with_pivot(t);
        ++t;
    }
    return out;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

KMatrix KMatrix::validate(const IntMatrix& a, std::size_t dim_cap) {
    if (!a.square()) throw DimensionMismatchError("K-matrix must be square");
    if (a.dim() == 0) throw DimensionMismatchError("K-matrix must be nonempty");
    if (a.dim() > dim_cap)
        throw CapacityError("K-matrix dimension " + std::to_string(a.dim()) +
                            " exceeds cap " + std::to_string(dim_cap));
    if (!a.is_symmetric()) throw NotSymmetricError();
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.at(i, i) % 2 != 0) throw OddDiagonalError(i);
    Int det = a.determinant();
    if (det == 0) throw DegenerateError();
    SnfDecomposition snf = smith_normal_form(a);
    SignatureTriple sig = kmx::signature(RatMatrix::from_int(a));
    RatMatrix inv = rational_inverse(a);
    return KMatrix(a, std::move(det), std::move(snf), sig, std::move(inv));
}

KMatrix validate_k_matrix(const IntMatrix& a, std::size_t dim_cap) {
    return KMatrix::validate(a, dim_cap);
}

}  // namespace kmx
