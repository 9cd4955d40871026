#pragma once

#include <cstddef>
#include <vector>

#include "kmx/cyclo.hpp"
#include "kmx/exactlin.hpp"

namespace kmx {

/// Element of a discriminant group in canonical coordinates
/// (c_1,...,c_k), 0 <= c_i < d_i. The zero element is the vacuum.
struct Element {
    std::vector<Int> coords;

    bool operator==(const Element&) const = default;
    bool operator<(const Element& rhs) const { return coords < rhs.coords; }
    bool is_zero() const {
        for (const Int& c : coords)
            if (c != 0) return false;
        return true;
    }
};

inline constexpr std::size_t kDefaultElementCap = 100000;

/// The discriminant group G_K = Z^n / K Z^n with canonical coordinates from
/// the Smith normal form, projection/lift maps, the quadratic form q_K and
/// the bicharacter Omega_K. Immutable after construction.
class DiscGroup {
public:
    explicit DiscGroup(KMatrix k);

    const KMatrix& k() const { return k_; }
    /// Invariant factors d_1 | ... | d_k, trivial factors dropped.
    const std::vector<Int>& invariant_factors() const { return factors_; }
    const Int& order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }

    Element zero() const { return Element{std::vector<Int>(factors_.size())}; }
    /// i-th canonical generator (coordinate vector e_i).
    Element generator(std::size_t i) const;

    Element project(const std::vector<Int>& x) const;
    std::vector<Int> lift(const Element& e) const;

    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scalar_mul(const Int& c, const Element& a) const;
    Int element_order(const Element& a) const;

    /// q_K(u) = exp(i*pi * x^T K^{-1} x) for any lift x of u.
    Phase q_form(const Element& u) const;
    /// Omega_K(u,v) = exp(2*pi*i * x^T K^{-1} y), the closed formula.
    Phase bicharacter(const Element& u, const Element& v) const;
    /// Omega_K via polarization q(u+v)/(q(u)q(v)); cross-check route.
    Phase bicharacter_polarized(const Element& u, const Element& v) const;

    /// All elements in lexicographic order, vacuum first.
    std::vector<Element> enumerate(std::size_t cap = kDefaultElementCap) const;

    /// Lexicographic position of an element (mixed-radix index).
    std::size_t index_of(const Element& e) const;
    Element element_at(std::size_t idx) const;

private:
    void check_coords(const Element& e) const;

    KMatrix k_;
    std::vector<Int> factors_;
    std::vector<std::size_t> factor_pos_;  // positions of nontrivial d_i in SNF
    IntMatrix u_inv_;                      // inverse of the SNF's U
    Int order_;
};

inline DiscGroup discriminant_group(const KMatrix& k) { return DiscGroup(k); }

struct GaussMilgramResult {
    CycloSum sum;      // Sigma_u q_K(u)
    int sigma_mod8;
    bool verified;     // (Sigma q)^2 == |G| * e^{i*pi*sigma/2} exactly
};

GaussMilgramResult gauss_milgram(const DiscGroup& g,
                                 std::size_t cap = kDefaultElementCap);

/// sigma(K) mod 8 in [0,8).
int central_charge_mod8(const KMatrix& k);

}  // namespace kmx
