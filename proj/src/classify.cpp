#include "kmx/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kmx {

std::size_t ReconstructedTheory::neg_of(std::size_t a) const {
    for (std::size_t b = 0; b < order; ++b)
        if (add[a][b] == vacuum) return b;
    throw NotClosedError("label has no inverse");
}

Int ReconstructedTheory::label_order(std::size_t a) const {
    Int ord = 1;
    std::size_t cur = a;
    while (cur != vacuum) {
        cur = add[cur][a];
        ++ord;
    }
    return ord;
}

ReconstructedTheory reconstruct(const std::vector<std::vector<Phase>>& s_phases,
                                const HalfPowerScalar& norm,
                                const std::vector<Phase>& t_diag) {
    std::size_t n = s_phases.size();
    if (n == 0) throw NotClosedError("empty S matrix");
    for (const auto& row : s_phases)
        if (row.size() != n) throw NotClosedError("S matrix is not square");
    if (t_diag.size() != n) throw NotClosedError("T diagonal size does not match S");

    // |G| = F(0,0)^{-2}, evaluated on the exact half-power scalar.
    Rat order_rat = Rat(1) / norm.value_squared();
    if (order_rat.get_den() != 1 || order_rat.get_num() != static_cast<unsigned long>(n))
        throw NotClosedError("vacuum normalization does not match the label count");

    // Locate the vacuum: the unique constant row; it must be positive.
    std::vector<std::size_t> const_rows;
    for (std::size_t i = 0; i < n; ++i) {
        bool constant = true;
        for (std::size_t j = 1; j < n; ++j)
            if (!(s_phases[i][j] == s_phases[i][0])) {
                constant = false;
                break;
            }
        if (constant) const_rows.push_back(i);
    }
    if (const_rows.size() > 1) throw AmbiguousVacuumError();
    if (const_rows.empty() || !s_phases[const_rows[0]][0].is_one())
        throw NoVacuumRowError();
    std::size_t vac = const_rows[0];

    // Characters chi_u(v) = F(u,v)/F(0,v).
    std::vector<std::vector<Phase>> chi(n, std::vector<Phase>(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            chi[u][v] = s_phases[u][v] * s_phases[vac][v].inverse();

    std::map<std::vector<Phase>, std::size_t> row_index;
    for (std::size_t u = 0; u < n; ++u) {
        auto [it, inserted] = row_index.emplace(chi[u], u);
        if (!inserted) throw NotClosedError("duplicate character rows");
    }

    ReconstructedTheory th;
    th.order = n;
    th.vacuum = vac;
    th.q = t_diag;
    th.omega = chi;
    th.add.assign(n, std::vector<std::size_t>(n));
    std::vector<Phase> prod(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = u; w < n; ++w) {
            for (std::size_t v = 0; v < n; ++v) prod[v] = chi[u][v] * chi[w][v];
            auto it = row_index.find(prod);
            if (it == row_index.end())
                throw NotClosedError("character product matches no row");
            th.add[u][w] = it->second;
            th.add[w][u] = it->second;
        }
    // Inverses must exist inside the row set.
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) prod[v] = chi[u][v].inverse();
        if (row_index.find(prod) == row_index.end())
            throw NotClosedError("character inverse matches no row");
    }
    validate_theory(th);
    return th;
}

void validate_theory(const ReconstructedTheory& th) {
    for (std::size_t a = 0; a < th.order; ++a)
        for (std::size_t b = 0; b < th.order; ++b) {
            Phase lhs = th.q[th.add[a][b]];
            Phase rhs = th.q[a] * th.q[b] * th.omega[a][b];
            if (!(lhs == rhs))
                throw PolarizationViolationError(
                    "q(a+b) != q(a)q(b)Omega(a,b) at labels (" + std::to_string(a) +
                    "," + std::to_string(b) + ")");
        }
}

namespace {

bool pair_less(const std::pair<Int, Phase>& a, const std::pair<Int, Phase>& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
}

}  // namespace

Fingerprint invariant_fingerprint(const KMatrix& k, std::size_t cap) {
    DiscGroup g(k);
    Fingerprint fp;
    fp.invariant_factors = g.invariant_factors();
    for (const Element& e : g.enumerate(cap))
        fp.order_q_pairs.emplace_back(g.element_order(e), g.q_form(e));
    std::sort(fp.order_q_pairs.begin(), fp.order_q_pairs.end(), pair_less);
    fp.sigma_mod8 = central_charge_mod8(k);
    return fp;
}

std::string to_string(InequivalenceReason r) {
    switch (r) {
        case InequivalenceReason::GroupMismatch: return "GroupMismatch";
        case InequivalenceReason::CentralChargeMismatch: return "CentralChargeMismatch";
        case InequivalenceReason::QMismatch: return "QMismatch";
    }
    return "?";
}

namespace {

// Backtracking over generator images shared by the K-to-K search and the
// reconstruction matcher. The target is abstracted by callables.
struct TargetView {
    std::size_t count;
    std::function<Int(std::size_t)> order_of;
    std::function<Phase(std::size_t)> q_of;
    std::function<Phase(std::size_t, std::size_t)> omega_of;
};

// Assigns images for the source generators in decreasing-order-d_i order,
// candidates in increasing target index (lex) order. on_complete returns
// true to accept the assignment (stops the search).
bool backtrack_images(const DiscGroup& src, const TargetView& tgt,
                      std::vector<std::size_t>& images,
                      const std::function<bool()>& on_complete) {
    std::size_t k = src.rank();
    std::vector<std::size_t> gen_order(k);  // assignment order: decreasing d_i
    for (std::size_t i = 0; i < k; ++i) gen_order[i] = k - 1 - i;

    std::vector<Phase> src_q(k);
    std::vector<std::vector<Phase>> src_omega(k, std::vector<Phase>(k));
    for (std::size_t i = 0; i < k; ++i) {
        src_q[i] = src.q_form(src.generator(i));
        for (std::size_t j = 0; j < k; ++j)
            src_omega[i][j] = src.bicharacter(src.generator(i), src.generator(j));
    }

    std::vector<bool> assigned(k, false);
    std::function<bool(std::size_t)> go = [&](std::size_t depth) -> bool {
        if (depth == k) return on_complete();
        std::size_t gi = gen_order[depth];
        const Int& want_order = src.invariant_factors()[gi];
        for (std::size_t cand = 0; cand < tgt.count; ++cand) {
            if (tgt.order_of(cand) != want_order) continue;
            if (!(tgt.q_of(cand) == src_q[gi])) continue;
            bool ok = true;
            for (std::size_t gj = 0; gj < k && ok; ++gj) {
                if (!assigned[gj]) continue;
                if (!(tgt.omega_of(cand, images[gj]) == src_omega[gi][gj])) ok = false;
            }
            if (!ok) continue;
            images[gi] = cand;
            assigned[gi] = true;
            if (go(depth + 1)) return true;
            assigned[gi] = false;
        }
        return false;
    };
    return go(0);
}

}  // namespace

EquivalenceResult measurable_equivalent(const KMatrix& k1, const KMatrix& k2,
                                        std::size_t cap) {
    DiscGroup g1(k1), g2(k2);
    if (g1.order() > static_cast<unsigned long>(cap) ||
        g2.order() > static_cast<unsigned long>(cap))
        throw CapacityError("group order exceeds equivalence cap " + std::to_string(cap));

    EquivalenceResult res;
    if (g1.invariant_factors() != g2.invariant_factors()) {
        res.reason = InequivalenceReason::GroupMismatch;
        return res;
    }
    if (central_charge_mod8(k1) != central_charge_mod8(k2)) {
        res.reason = InequivalenceReason::CentralChargeMismatch;
        return res;
    }
    Fingerprint f1 = invariant_fingerprint(k1, cap);
    Fingerprint f2 = invariant_fingerprint(k2, cap);
    if (f1.order_q_pairs != f2.order_q_pairs) {
        res.reason = InequivalenceReason::QMismatch;
        return res;
    }

    std::vector<Element> elems2 = g2.enumerate(cap);
    std::vector<Int> orders2(elems2.size());
    std::vector<Phase> q2(elems2.size());
    for (std::size_t i = 0; i < elems2.size(); ++i) {
        orders2[i] = g2.element_order(elems2[i]);
        q2[i] = g2.q_form(elems2[i]);
    }
    TargetView tgt{
        elems2.size(),
        [&](std::size_t i) { return orders2[i]; },
        [&](std::size_t i) { return q2[i]; },
        [&](std::size_t i, std::size_t j) { return g2.bicharacter(elems2[i], elems2[j]); },
    };

    std::size_t k = g1.rank();
    std::vector<std::size_t> images(k);
    std::vector<Element> elems1 = g1.enumerate(cap);
    std::vector<std::size_t> phi_map;  // g1 enumeration index -> g2 index

    auto on_complete = [&]() -> bool {
        // phi(sum c_i g_i) = sum c_i h_i; must be a bijection.
        phi_map.assign(elems1.size(), 0);
        std::vector<bool> seen(elems2.size(), false);
        for (std::size_t e = 0; e < elems1.size(); ++e) {
            Element img = g2.zero();
            for (std::size_t i = 0; i < k; ++i)
                img = g2.add(img, g2.scalar_mul(elems1[e].coords[i], elems2[images[i]]));
            std::size_t idx = g2.index_of(img);
            if (seen[idx]) return false;  // not injective; keep searching
            seen[idx] = true;
            phi_map[e] = idx;
        }
        return true;
    };

    if (!backtrack_images(g1, tgt, images, on_complete)) {
        res.reason = InequivalenceReason::QMismatch;
        return res;
    }

    // Re-verify q pointwise. A failure here is an implementation bug: the
    // generator constraints imply it by polarization.
    for (std::size_t e = 0; e < elems1.size(); ++e)
        if (!(g1.q_form(elems1[e]) == q2[phi_map[e]]))
            throw InternalMismatchError("witness fails q-preservation on an element");

    // Conjugation identities: T is the q check above; for S check
    // Omega2(phi u, phi v) = Omega1(u, v) entrywise while |G|^2 stays small,
    // on generator pairs beyond (equivalent by biadditivity).
    if (elems1.size() * elems1.size() <= 10000000) {
        for (std::size_t u = 0; u < elems1.size(); ++u)
            for (std::size_t v = u; v < elems1.size(); ++v) {
                Phase lhs = g1.bicharacter(elems1[u], elems1[v]);
                Phase rhs = g2.bicharacter(elems2[phi_map[u]], elems2[phi_map[v]]);
                if (!(lhs == rhs))
                    throw InternalMismatchError("witness fails S conjugation identity");
            }
    }

    Isomorphism iso;
    iso.source_factors = g1.invariant_factors();
    iso.target_factors = g2.invariant_factors();
    iso.generator_images.resize(k);
    for (std::size_t i = 0; i < k; ++i) iso.generator_images[i] = elems2[images[i]].coords;
    res.phi = std::move(iso);
    return res;
}

std::optional<std::vector<std::size_t>> match_reconstruction(
    const ReconstructedTheory& th, const DiscGroup& g, std::size_t cap) {
    if (g.order() > static_cast<unsigned long>(cap))
        throw CapacityError("group order exceeds cap");
    if (g.order() != static_cast<unsigned long>(th.order)) return std::nullopt;

    std::vector<Int> orders(th.order);
    for (std::size_t i = 0; i < th.order; ++i) orders[i] = th.label_order(i);
    TargetView tgt{
        th.order,
        [&](std::size_t i) { return orders[i]; },
        [&](std::size_t i) { return th.q[i]; },
        [&](std::size_t i, std::size_t j) { return th.omega[i][j]; },
    };

    std::vector<Element> elems = g.enumerate(cap);
    std::size_t k = g.rank();
    std::vector<std::size_t> images(k);
    std::vector<std::size_t> psi;

    auto on_complete = [&]() -> bool {
        psi.assign(elems.size(), 0);
        std::vector<bool> seen(th.order, false);
        for (std::size_t e = 0; e < elems.size(); ++e) {
            std::size_t img = th.vacuum;
            for (std::size_t i = 0; i < k; ++i) {
                Int c = elems[e].coords[i];
                for (Int step = 0; step < c; ++step) img = th.add[img][images[i]];
            }
            if (seen[img]) return false;
            seen[img] = true;
            if (!(th.q[img] == g.q_form(elems[e]))) return false;
            psi[e] = img;
        }
        return true;
    };

    if (!backtrack_images(g, tgt, images, on_complete)) return std::nullopt;
    return psi;
}

}  // namespace kmx
