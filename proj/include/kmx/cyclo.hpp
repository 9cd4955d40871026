#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kmx/errors.hpp"

namespace kmx {

using Int = mpz_class;
using Rat = mpq_class;

/// An exact root of unity e^{i*pi*p/q}, stored as the reduced exponent p/q
/// taken modulo 2 (canonical representative in [0,2)). Multiplication is
/// addition of exponents mod 2.
class Phase {
public:
    Phase() : e_(0) {}

    static Phase from_exponent(const Rat& e);
    static Phase from_exponent(long num, long den);

    /// Canonical exponent in [0,2).
    const Rat& exponent() const { return e_; }

    Phase operator*(const Phase& rhs) const { return from_exponent(e_ + rhs.e_); }
    Phase pow(const Int& k) const;
    Phase pow(long k) const { return pow(Int(k)); }
    Phase inverse() const { return from_exponent(-e_); }

    bool operator==(const Phase& rhs) const { return e_ == rhs.e_; }
    bool operator<(const Phase& rhs) const { return e_ < rhs.e_; }
    bool is_one() const { return e_ == 0; }

    /// Multiplicative order as a root of unity.
    Int order() const;

    /// Canonical serialization "p/q" (exponent of e^{i*pi}).
    std::string str() const;
    static Phase parse(std::string_view s);

    std::pair<double, double> approx() const;

private:
    Rat e_;
};

inline Phase phase_mul(const Phase& a, const Phase& b) { return a * b; }
inline Phase phase_pow(const Phase& a, const Int& k) { return a.pow(k); }

/// Integer-coefficient polynomial, ascending degree, leading coefficient
/// nonzero (empty list = zero polynomial).
class IntPoly {
public:
    IntPoly() = default;
    static IntPoly from_coeffs(std::vector<Int> c);
    static IntPoly monomial(std::size_t deg, const Int& coeff);

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    bool operator==(const IntPoly& rhs) const = default;

    /// Quotient and remainder; the divisor must be monic.
    static std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den);

private:
    void trim();
    std::vector<Int> c_;
};

/// The n-th cyclotomic polynomial, memoized behind an internal lock.
IntPoly cyclotomic_polynomial(unsigned n);

inline constexpr long kDefaultModulusCap = 100000;

/// Integer-coefficient formal sum of roots of unity. Every term is a power
/// of zeta = e^{i*pi/N}; exponents live in Z/2N. Zero-testing reduces the
/// exponent vector as a polynomial in zeta_{2N} modulo Phi_{2N}.
class CycloSum {
public:
    CycloSum() : n_(1) {}

    static CycloSum from_phase(const Phase& p, const Int& coeff = Int(1),
                               long cap = kDefaultModulusCap);
    static CycloSum from_integer(const Int& v);

    void add_phase(const Phase& p, const Int& coeff = Int(1),
                   long cap = kDefaultModulusCap);

    CycloSum operator+(const CycloSum& rhs) const;
    CycloSum operator-(const CycloSum& rhs) const;
    CycloSum operator*(const CycloSum& rhs) const;
    CycloSum operator*(const Int& scalar) const;
    CycloSum operator-() const;

    bool is_zero() const;
    bool equals(const CycloSum& rhs) const { return (*this - rhs).is_zero(); }

    /// Float evaluation for reports; accuracy <= 1e-12 relative for
    /// supports up to 1e4 terms.
    std::pair<double, double> approx() const;

    long modulus() const { return n_; }
    const std::map<long, Int>& coeffs() const { return coeff_; }
    std::size_t support_size() const { return coeff_.size(); }

private:
    CycloSum rescaled(long new_n) const;
    void prune();

    long n_;                      // terms are powers of e^{i*pi/n_}
    std::map<long, Int> coeff_;  // exponent in [0, 2n_) -> coefficient
};

}  // namespace kmx
