#include "kmx/cyclo.hpp"

#include <cmath>
#include <mutex>
#include <numeric>

namespace kmx {

namespace {
constexpr long double kPi = 3.141592653589793238462643383279502884L;
}

Phase Phase::from_exponent(const Rat& e) {
    Phase p;
    Rat r = e;
    r.canonicalize();
    Int den = r.get_den();
    Int two_den = 2 * den;
    Int num;
    mpz_fdiv_r(num.get_mpz_t(), r.get_num().get_mpz_t(), two_den.get_mpz_t());
    p.e_ = Rat(num, den);
    p.e_.canonicalize();
    return p;
}

Phase Phase::from_exponent(long num, long den) {
    return from_exponent(Rat(Int(num), Int(den)));
}

Phase Phase::pow(const Int& k) const {
    return from_exponent(Rat(e_.get_num() * k, e_.get_den()));
}

Int Phase::order() const {
    // Smallest m >= 1 with m*p/q in 2Z.
    Int p = e_.get_num(), q = e_.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), Int(2 * q).get_mpz_t());
    return 2 * q / g;
}

std::string Phase::str() const {
    return e_.get_num().get_str() + "/" + e_.get_den().get_str();
}

Phase Phase::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        throw ParseError("phase must be \"p/q\": " + std::string(s));
    try {
        Int num(std::string(s.substr(0, slash)), 10);
        Int den(std::string(s.substr(slash + 1)), 10);
        if (den <= 0) throw ParseError("phase denominator must be positive");
        return from_exponent(Rat(num, den));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad phase literal: " + std::string(s));
    }
}

std::pair<double, double> Phase::approx() const {
    long double x = kPi * e_.get_d();
    return {static_cast<double>(std::cos(x)), static_cast<double>(std::sin(x))};
}

IntPoly IntPoly::from_coeffs(std::vector<Int> c) {
    IntPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(std::size_t deg, const Int& coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = coeff;
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<Int> out(std::max(c_.size(), rhs.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return from_coeffs(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<Int> out(std::max(c_.size(), rhs.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
    return from_coeffs(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    return from_coeffs(std::move(out));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero() || den.c_.back() != 1)
        throw DimensionMismatchError("divmod divisor must be monic");
    if (num.c_.size() < den.c_.size()) return {IntPoly(), num};
    std::vector<Int> rem = num.c_;
    std::size_t dd = den.degree();
    std::vector<Int> quo(rem.size() - dd, Int(0));
    for (std::size_t i = rem.size(); i-- > dd;) {
        Int c = rem[i];
        if (c == 0) continue;
        quo[i - dd] = c;
        for (std::size_t k = 0; k <= dd; ++k) rem[i - dd + k] -= c * den.c_[k];
    }
    return {from_coeffs(std::move(quo)), from_coeffs(std::move(rem))};
}

namespace {
std::mutex g_cyclo_mutex;
std::map<unsigned, IntPoly> g_cyclo_cache;

IntPoly cyclotomic_locked(unsigned n) {
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
    IntPoly result;
    if (n == 1) {
        result = IntPoly::from_coeffs({Int(-1), Int(1)});
    } else {
        IntPoly prod = IntPoly::from_coeffs({Int(1)});
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_locked(d);
        IntPoly xn1 = IntPoly::monomial(n, Int(1)) - IntPoly::from_coeffs({Int(1)});
        auto [q, r] = IntPoly::divmod(xn1, prod);
        if (!r.is_zero())
            throw InternalMismatchError("cyclotomic division left a remainder");
        result = std::move(q);
    }
    g_cyclo_cache.emplace(n, result);
    return result;
}
}  // namespace

IntPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw DimensionMismatchError("cyclotomic index must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_locked(n);
}

CycloSum CycloSum::from_phase(const Phase& p, const Int& coeff, long cap) {
    CycloSum s;
    s.add_phase(p, coeff, cap);
    return s;
}

CycloSum CycloSum::from_integer(const Int& v) {
    CycloSum s;
    if (v != 0) s.coeff_[0] = v;
    return s;
}

void CycloSum::add_phase(const Phase& p, const Int& coeff, long cap) {
    if (coeff == 0) return;
    const Rat& e = p.exponent();
    if (!e.get_den().fits_slong_p())
        throw CapacityError("phase denominator exceeds modulus cap");
    long q = e.get_den().get_si();
    long n = std::lcm(n_, q);
    if (n > cap)
        throw CapacityError("cyclotomic modulus " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
    if (n != n_) *this = rescaled(n);
    // e^{i*pi*p/q} = zeta_{2N}^{p*N/q}
    Int idx = e.get_num() * (n_ / q);
    long k = idx.get_si();  // canonical exponent < 2q <= 2N, fits
    Int& c = coeff_[k];
    c += coeff;
    if (c == 0) coeff_.erase(k);
}

CycloSum CycloSum::rescaled(long new_n) const {
    CycloSum out;
    out.n_ = new_n;
    long f = new_n / n_;
    for (const auto& [k, c] : coeff_) out.coeff_[k * f] = c;
    return out;
}

void CycloSum::prune() {
    for (auto it = coeff_.begin(); it != coeff_.end();)
        it = (it->second == 0) ? coeff_.erase(it) : std::next(it);
}

CycloSum CycloSum::operator+(const CycloSum& rhs) const {
    long n = std::lcm(n_, rhs.n_);
    CycloSum out = rescaled(n);
    CycloSum other = rhs.rescaled(n);
    for (const auto& [k, c] : other.coeff_) out.coeff_[k] += c;
    out.prune();
    return out;
}

CycloSum CycloSum::operator-(const CycloSum& rhs) const { return *this + (-rhs); }

CycloSum CycloSum::operator-() const {
    CycloSum out = *this;
    for (auto& [k, c] : out.coeff_) c = -c;
    return out;
}

CycloSum CycloSum::operator*(const CycloSum& rhs) const {
    long n = std::lcm(n_, rhs.n_);
    CycloSum a = rescaled(n);
    CycloSum b = rhs.rescaled(n);
    CycloSum out;
    out.n_ = n;
    long two_n = 2 * n;
    for (const auto& [ka, ca] : a.coeff_)
        for (const auto& [kb, cb] : b.coeff_) out.coeff_[(ka + kb) % two_n] += ca * cb;
    out.prune();
    return out;
}

CycloSum CycloSum::operator*(const Int& scalar) const {
    if (scalar == 0) return CycloSum();
    CycloSum out = *this;
    for (auto& [k, c] : out.coeff_) c *= scalar;
    return out;
}

bool CycloSum::is_zero() const {
    if (coeff_.empty()) return true;
    // Shrink to the effective modulus before reducing mod Phi.
    long two_n = 2 * n_;
    long g = two_n;
    for (const auto& [k, c] : coeff_) {
        if (c == 0) continue;
        g = std::gcd(g, k);
        if (g == 1) break;
    }
    if (g > 1 && (two_n / g) % 2 != 0) g /= 2;
    long m = two_n / std::max(g, 1L);  // terms are powers of zeta_m, m even
    std::vector<Int> poly(static_cast<std::size_t>(m), Int(0));
    bool any = false;
    for (const auto& [k, c] : coeff_) {
        if (c == 0) continue;
        poly[static_cast<std::size_t>(k / g)] += c;
        any = true;
    }
    if (!any) return true;
    IntPoly p = IntPoly::from_coeffs(std::move(poly));
    if (p.is_zero()) return true;
    IntPoly phi = cyclotomic_polynomial(static_cast<unsigned>(m));
    auto [q, r] = IntPoly::divmod(p, phi);
    return r.is_zero();
}

std::pair<double, double> CycloSum::approx() const {
    long double re = 0, im = 0;
    for (const auto& [k, c] : coeff_) {
        long double x = kPi * static_cast<long double>(k) / static_cast<long double>(n_);
        long double cd = c.get_d();
        re += cd * std::cos(x);
        im += cd * std::sin(x);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace kmx
