#include "kmx/randgen.hpp"

namespace kmx {

IntMatrix random_even_symmetric(Rng& rng, std::size_t n, long bound) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a.at(i, i) = 2 * rng.uniform(-bound / 2, bound / 2);
        for (std::size_t j = i + 1; j < n; ++j) {
            a.at(i, j) = rng.uniform(-bound, bound);
            a.at(j, i) = a.at(i, j);
        }
    }
    return a;
}

KMatrix random_k_matrix(Rng& rng, std::size_t max_dim, const Int& max_abs_det) {
    for (;;) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_dim)));
        IntMatrix a = random_even_symmetric(rng, n, 8);
        Int det = a.determinant();
        if (det == 0 || abs(det) > max_abs_det) continue;
        return validate_k_matrix(a);
    }
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, unsigned ops) {
    IntMatrix m = IntMatrix::identity(n);
    if (n == 1) {
        if (rng.uniform(0, 1)) m.at(0, 0) = -1;
        return m;
    }
    for (unsigned t = 0; t < ops; ++t) {
        switch (rng.uniform(0, 3)) {
            case 0: {  // row_i += c * row_j
                std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
                std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
                if (i == j) break;
                long c = rng.uniform(1, 2) * (rng.uniform(0, 1) ? 1 : -1);
                for (std::size_t k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
                break;
            }
            case 1: {  // swap rows
                std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
                std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
                if (i == j) break;
                for (std::size_t k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
                break;
            }
            default: {  // negate a row
                std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
                for (std::size_t k = 0; k < n; ++k) m.at(i, k) = -m.at(i, k);
                break;
            }
        }
    }
    return m;
}

RatMatrix random_symplectic(Rng& rng, std::size_t m, unsigned steps) {
    RatMatrix out = RatMatrix::identity(2 * m);
    for (unsigned t = 0; t < steps; ++t) {
        RatMatrix f(2 * m, 2 * m);
        switch (rng.uniform(0, 3)) {
            case 0: {  // diag(A, A^{-T})
                IntMatrix a = random_unimodular(rng, m, 4);
                RatMatrix ainv_t = rational_inverse(a).transpose();
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        f.at(i, j) = a.at(i, j);
                        f.at(m + i, m + j) = ainv_t.at(i, j);
                    }
                break;
            }
            case 1:    // upper shear by a symmetric block
            case 2: {  // lower shear by a symmetric block
                bool upper = rng.uniform(0, 1) == 0;
                IntMatrix b(m, m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = i; j < m; ++j) {
                        b.at(i, j) = rng.uniform(-2, 2);
                        b.at(j, i) = b.at(i, j);
                    }
                f = RatMatrix::identity(2 * m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        if (upper)
                            f.at(i, m + j) = b.at(i, j);
                        else
                            f.at(m + i, j) = b.at(i, j);
                    }
                break;
            }
            default: {  // J itself
                for (std::size_t i = 0; i < m; ++i) {
                    f.at(i, m + i) = 1;
                    f.at(m + i, i) = -1;
                }
                break;
            }
        }
        out = f * out;
    }
    return out;
}

RatMatrix random_lagrangian_basis(Rng& rng, std::size_t m, unsigned steps) {
    RatMatrix sp = random_symplectic(rng, m, steps);
    RatMatrix basis(2 * m, m);
    for (std::size_t i = 0; i < 2 * m; ++i)
        for (std::size_t j = 0; j < m; ++j) basis.at(i, j) = sp.at(i, j);
    // Rational column scalings keep the span and exercise non-integer input.
    for (std::size_t j = 0; j < m; ++j) {
        Rat s(rng.uniform(1, 3), rng.uniform(1, 3));
        s.canonicalize();
        for (std::size_t i = 0; i < 2 * m; ++i) basis.at(i, j) *= s;
    }
    return basis;
}

IntMatrix e8_cartan() {
    IntMatrix a(8, 8);
    for (std::size_t i = 0; i < 8; ++i) a.at(i, i) = 2;
    // Dynkin diagram: chain 0-2-3-4-5-6-7 with node 1 attached to node 3.
    const std::size_t edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (const auto& e : edges) {
        a.at(e[0], e[1]) = -1;
        a.at(e[1], e[0]) = -1;
    }
    return a;
}

IntMatrix hyperbolic_u() {
    return IntMatrix::from_rows(std::vector<std::vector<long>>{{0, 1}, {1, 0}});
}

}  // namespace kmx
