#include "kmx/disc.hpp"

#include <string>

namespace kmx {

namespace {

IntMatrix integer_inverse(const IntMatrix& m) {
    RatMatrix inv = rational_inverse(m);
    IntMatrix out(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            const Rat& r = inv.at(i, j);
            if (r.get_den() != 1)
                throw InternalMismatchError("unimodular matrix has non-integer inverse");
            out.at(i, j) = r.get_num();
        }
    return out;
}

}  // namespace

DiscGroup::DiscGroup(KMatrix k) : k_(std::move(k)), order_(1) {
    const IntMatrix& d = k_.snf().d;
    for (std::size_t i = 0; i < d.dim(); ++i) {
        if (d.at(i, i) > 1) {
            factors_.push_back(d.at(i, i));
            factor_pos_.push_back(i);
        }
        order_ *= d.at(i, i);
    }
    u_inv_ = integer_inverse(k_.snf().u);
}

Element DiscGroup::generator(std::size_t i) const {
    Element e = zero();
    e.coords.at(i) = 1;
    return e;
}

void DiscGroup::check_coords(const Element& e) const {
    if (e.coords.size() != factors_.size())
        throw DimensionMismatchError("element coordinate count does not match group rank");
}

Element DiscGroup::project(const std::vector<Int>& x) const {
    std::size_t n = k_.dim();
    if (x.size() != n)
        throw DimensionMismatchError("vector length does not match lattice rank");
    Element e = zero();
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        std::size_t row = factor_pos_[t];
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += u_inv_.at(row, j) * x[j];
        mpz_fdiv_r(e.coords[t].get_mpz_t(), acc.get_mpz_t(), factors_[t].get_mpz_t());
    }
    return e;
}

std::vector<Int> DiscGroup::lift(const Element& e) const {
    check_coords(e);
    std::size_t n = k_.dim();
    const IntMatrix& u = k_.snf().u;
    std::vector<Int> x(n, Int(0));
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        std::size_t col = factor_pos_[t];
        if (e.coords[t] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) x[i] += u.at(i, col) * e.coords[t];
    }
    return x;
}

Element DiscGroup::add(const Element& a, const Element& b) const {
    check_coords(a);
    check_coords(b);
    Element e = zero();
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        Int s = a.coords[t] + b.coords[t];
        mpz_fdiv_r(e.coords[t].get_mpz_t(), s.get_mpz_t(), factors_[t].get_mpz_t());
    }
    return e;
}

Element DiscGroup::neg(const Element& a) const {
    check_coords(a);
    Element e = zero();
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        Int s = -a.coords[t];
        mpz_fdiv_r(e.coords[t].get_mpz_t(), s.get_mpz_t(), factors_[t].get_mpz_t());
    }
    return e;
}

Element DiscGroup::scalar_mul(const Int& c, const Element& a) const {
    check_coords(a);
    Element e = zero();
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        Int s = c * a.coords[t];
        mpz_fdiv_r(e.coords[t].get_mpz_t(), s.get_mpz_t(), factors_[t].get_mpz_t());
    }
    return e;
}

Int DiscGroup::element_order(const Element& a) const {
    check_coords(a);
    Int ord = 1;
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.coords[t].get_mpz_t(), factors_[t].get_mpz_t());
        Int cyc = factors_[t] / g;
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), cyc.get_mpz_t());
    }
    return ord;
}

Phase DiscGroup::q_form(const Element& u) const {
    std::vector<Int> x = lift(u);
    const RatMatrix& kinv = k_.inverse();
    std::size_t n = k_.dim();
    Rat acc(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] == 0) continue;
            acc += Rat(x[i] * x[j]) * kinv.at(i, j);
        }
    }
    return Phase::from_exponent(acc);
}

Phase DiscGroup::bicharacter(const Element& u, const Element& v) const {
    std::vector<Int> x = lift(u);
    std::vector<Int> y = lift(v);
    const RatMatrix& kinv = k_.inverse();
    std::size_t n = k_.dim();
    Rat acc(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            acc += Rat(x[i] * y[j]) * kinv.at(i, j);
        }
    }
    return Phase::from_exponent(2 * acc);
}

Phase DiscGroup::bicharacter_polarized(const Element& u, const Element& v) const {
    return q_form(add(u, v)) * q_form(u).inverse() * q_form(v).inverse();
}

std::vector<Element> DiscGroup::enumerate(std::size_t cap) const {
    if (order_ > static_cast<unsigned long>(cap))
        throw CapacityError("group order " + order_.get_str() +
                            " exceeds enumeration cap " + std::to_string(cap));
    std::size_t total = static_cast<std::size_t>(order_.get_ui());
    std::vector<Element> out;
    out.reserve(total);
    Element cur = zero();
    out.push_back(cur);
    for (std::size_t c = 1; c < total; ++c) {
        // Mixed-radix increment, last coordinate fastest: lex order.
        for (std::size_t t = factors_.size(); t-- > 0;) {
            cur.coords[t] += 1;
            if (cur.coords[t] < factors_[t]) break;
            cur.coords[t] = 0;
        }
        out.push_back(cur);
    }
    return out;
}

std::size_t DiscGroup::index_of(const Element& e) const {
    check_coords(e);
    Int idx = 0;
    for (std::size_t t = 0; t < factors_.size(); ++t) idx = idx * factors_[t] + e.coords[t];
    if (!idx.fits_ulong_p())
        throw CapacityError("element index exceeds addressable range");
    return static_cast<std::size_t>(idx.get_ui());
}

Element DiscGroup::element_at(std::size_t idx) const {
    Element e = zero();
    Int rem(static_cast<unsigned long>(idx));
    for (std::size_t t = factors_.size(); t-- > 0;) {
        Int q;
        mpz_fdiv_qr(q.get_mpz_t(), e.coords[t].get_mpz_t(), rem.get_mpz_t(),
                    factors_[t].get_mpz_t());
        rem = q;
    }
    return e;
}

GaussMilgramResult gauss_milgram(const DiscGroup& g, std::size_t cap) {
    GaussMilgramResult out;
    CycloSum sum;
    for (const Element& u : g.enumerate(cap)) sum = sum + CycloSum::from_phase(g.q_form(u));
    out.sum = sum;
    long sigma = g.k().signature();
    out.sigma_mod8 = static_cast<int>(((sigma % 8) + 8) % 8);
    // Certify Sigma q = sqrt(|G|) e^{2*pi*i*sigma/8} by squaring both sides:
    // (Sigma q)^2 must equal |G| * e^{i*pi*sigma/2} exactly.
    CycloSum lhs = sum * sum;
    CycloSum rhs = CycloSum::from_phase(Phase::from_exponent(Rat(sigma, 2)), g.order());
    out.verified = lhs.equals(rhs);
    return out;
}

int central_charge_mod8(const KMatrix& k) {
    long sigma = k.signature();
    return static_cast<int>(((sigma % 8) + 8) % 8);
}

}  // namespace kmx
