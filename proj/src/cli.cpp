#include "kmx/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

namespace kmx::cli {

int exit_code_for(const Error& e) {
    const std::string& k = e.kind();
    if (k == "ParseError" || k == "DimensionMismatch") return kExitParse;
    if (k == "NotSymmetric" || k == "OddDiagonal" || k == "Degenerate" ||
        k == "SingularMatrix" || k == "NotLagrangian")
        return kExitValidation;
    if (k == "CapacityExceeded") return kExitCapacity;
    if (k == "NoVacuumRow" || k == "AmbiguousVacuum" || k == "NotClosed" ||
        k == "PolarizationViolation")
        return kExitReconstruct;
    return 1;
}

namespace {

Json error_json(const Error& e) {
    Json j;
    j["kind"] = e.kind();
    j["message"] = std::string(e.what());
    if (const auto* odd = dynamic_cast<const OddDiagonalError*>(&e))
        j["index"] = odd->index();
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Table-mode rendering: named root-of-unity symbols when the phase order
// divides 24 (reduced exponent denominator divides 12), else "p/q".
std::string phase_symbol(const Phase& p) {
    const Rat& e = p.exponent();
    if (Int(12) % e.get_den() == 0) {
        Int j24 = Int(e.get_num() * (12 / e.get_den())) % 24;
        long j = j24.get_si();
        switch (j) {
            case 0: return "1";
            case 12: return "-1";
            case 6: return "i";
            case 18: return "-i";
            case 8: return "w";
            case 16: return "w^2";
            default: return "z24^" + std::to_string(j);
        }
    }
    return p.str();
}

std::string half_power_text(const HalfPowerScalar& s) {
    if (s.half_exponent == 0 || s.base == 1) return "1";
    std::string out = s.base.get_str() + "^";
    if (s.half_exponent % 2 == 0) {
        out += "(" + std::to_string(s.half_exponent / 2) + ")";
    } else {
        out += "(" + std::to_string(s.half_exponent) + "/2)";
    }
    return out;
}

void render_table(const Json& rep, std::ostream& out) {
    out << "K (n=" << rep["k"]["entries"].size() << "): det = " << rep["det"].dump()
        << ", signature (" << rep["signature"]["n_plus"] << ","
        << rep["signature"]["n_minus"] << "," << rep["signature"]["n_zero"]
        << "), sigma = " << rep["signature"]["sigma"] << "\n";
    out << "G = ";
    if (rep["invariant_factors"].empty()) {
        out << "trivial";
    } else {
        bool first = true;
        for (const auto& f : rep["invariant_factors"]) {
            if (!first) out << " x ";
            out << "Z/" << f.dump();
            first = false;
        }
    }
    out << "   |G| = " << rep["group_order"].dump() << "\n";
    out << "c mod 8 = " << rep["c_mod8"] << ", Gauss-Milgram verified: "
        << (rep["gauss_milgram_verified"].get<bool>() ? "yes" : "no") << "\n";
    out << "q:";
    for (const auto& q : rep["q"]) out << " " << phase_symbol(Phase::parse(q.get<std::string>()));
    out << "\nOmega:\n";
    for (const auto& row : rep["omega"]) {
        out << " ";
        for (const auto& x : row) out << " " << phase_symbol(Phase::parse(x.get<std::string>()));
        out << "\n";
    }
    out << "T = diag(";
    bool first = true;
    for (const auto& t : rep["modular_genus1"]["t"]) {
        if (!first) out << ", ";
        out << phase_symbol(Phase::parse(t.get<std::string>()));
        first = false;
    }
    out << ")\n";
    HalfPowerScalar norm{int_from_json(rep["modular_genus1"]["norm"]["base"]),
                         rep["modular_genus1"]["norm"]["half_exponent"].get<long>()};
    out << "S = " << half_power_text(norm) << " * Omega\n";
    out << "dims:";
    unsigned g = 0;
    for (const auto& d : rep["dims"]) out << " g=" << g++ << ":" << d.dump();
    out << "\nZ(S^3) = "
        << half_power_text({int_from_json(rep["z_s3"]["base"]),
                            rep["z_s3"]["half_exponent"].get<long>()})
        << "\n";
}

}  // namespace

int run_analyze(const Json& input, const Options& opt, std::ostream& out,
                std::ostream& err) {
    IntMatrix m;
    try {
        m = int_matrix_from_json(input);
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        return kExitParse;
    }
    std::optional<KMatrix> maybe_k;
    try {
        maybe_k = validate_k_matrix(m);
    } catch (const Error& e) {
        Json rep;
        rep["k"] = to_json(m);
        rep["valid"] = false;
        rep["error"] = error_json(e);
        emit(out, rep);
        err << e.kind() << ": " << e.what() << "\n";
        int code = exit_code_for(e);
        return code == kExitOk ? kExitValidation : code;
    }
    const KMatrix& k = *maybe_k;

    DiscGroup g(k);
    Json rep;
    rep["k"] = to_json(k.matrix());
    rep["valid"] = true;
    rep["det"] = json_int(k.det());
    rep["signature"] = to_json(k.sig());
    rep["invariant_factors"] = Json::array();
    for (const Int& f : g.invariant_factors())
        rep["invariant_factors"].push_back(json_int(f));
    rep["group_order"] = json_int(g.order());

    // The q and Omega tables are exactly the genus-1 T diagonal and S kernel;
    // materialize once under the label cap.
    ModularData md = s_matrix(g, 1, opt.label_cap());
    Json q = Json::array();
    for (const Phase& p : md.t_diag) q.push_back(to_json(p));
    rep["q"] = std::move(q);
    Json omega = Json::array();
    for (const auto& row : md.omega) {
        Json jrow = Json::array();
        for (const Phase& p : row) jrow.push_back(to_json(p));
        omega.push_back(std::move(jrow));
    }
    rep["omega"] = std::move(omega);
    rep["c_mod8"] = central_charge_mod8(k);
    rep["gauss_milgram_verified"] = gauss_milgram(g, opt.element_cap()).verified;
    rep["modular_genus1"] = to_json(md);
    Json dims = Json::array();
    for (unsigned gen = 0; gen <= opt.genus_max; ++gen)
        dims.push_back(json_int(state_space_dimension(g, gen)));
    rep["dims"] = std::move(dims);
    Json cyl = Json::array();
    for (unsigned gen = 0; gen <= opt.genus_max; ++gen)
        cyl.push_back(to_json(cylinder_factor(g, gen)));
    rep["cylinder_factors"] = std::move(cyl);
    rep["z_s3"] = to_json(z_s3(k));

    if (opt.table)
        render_table(rep, out);
    else
        emit(out, rep);
    return kExitOk;
}

int run_modular(const Json& input, unsigned genus, const Options& opt,
                std::ostream& out, std::ostream& err) {
    IntMatrix m;
    try {
        m = int_matrix_from_json(input);
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        return kExitParse;
    }
    KMatrix k = validate_k_matrix(m);
    DiscGroup g(k);
    emit(out, to_json(s_matrix(g, genus, opt.label_cap())));
    return kExitOk;
}

int run_reconstruct(const Json& input, std::ostream& out, std::ostream& err) {
    if (!input.is_object() || !input.contains("omega") || !input.contains("t") ||
        !input.contains("norm")) {
        err << "ParseError: reconstruct input needs \"omega\", \"t\", \"norm\"\n";
        return kExitParse;
    }
    std::vector<std::vector<Phase>> s_phases;
    for (const Json& row : input.at("omega")) {
        std::vector<Phase> r;
        for (const Json& x : row) r.push_back(phase_from_json(x));
        s_phases.push_back(std::move(r));
    }
    std::vector<Phase> t;
    for (const Json& x : input.at("t")) t.push_back(phase_from_json(x));
    HalfPowerScalar norm = half_power_from_json(input.at("norm"));
    ReconstructedTheory th = reconstruct(s_phases, norm, t);
    emit(out, to_json(th));
    (void)err;
    return kExitOk;
}

int run_equiv(const Json& k1_json, const Json& k2_json, const Options& opt,
              std::ostream& out, std::ostream& err) {
    KMatrix k1 = validate_k_matrix(int_matrix_from_json(k1_json));
    KMatrix k2 = validate_k_matrix(int_matrix_from_json(k2_json));
    EquivalenceResult res = measurable_equivalent(k1, k2, opt.equiv_cap());
    Json j;
    j["equivalent"] = res.equivalent();
    if (res.equivalent()) {
        Json phi = Json::array();
        for (const auto& img : res.phi->generator_images) {
            Json row = Json::array();
            for (const Int& c : img) row.push_back(json_int(c));
            phi.push_back(std::move(row));
        }
        j["phi"] = std::move(phi);
        j["sigma_mod8"] = Json::array({central_charge_mod8(k1), central_charge_mod8(k2)});
    } else {
        j["reason"] = to_string(*res.reason);
    }
    emit(out, j);
    (void)err;
    return kExitOk;
}

int run_maslov(const Json& input, std::ostream& out, std::ostream& err) {
    if (!input.is_object() || !input.contains("lagrangians")) {
        err << "ParseError: maslov input needs \"lagrangians\"\n";
        return kExitParse;
    }
    std::vector<RatMatrix> bases;
    for (const Json& l : input.at("lagrangians")) bases.push_back(rat_matrix_from_json(l));
    if (bases.size() != 3 && bases.size() != 4) {
        err << "ParseError: need three or four Lagrangians\n";
        return kExitParse;
    }
    SymplecticSpace space = [&] {
        if (input.contains("form"))
            return SymplecticSpace(rat_matrix_from_json(input.at("form")));
        std::size_t dim = input.contains("dim") ? input.at("dim").get<std::size_t>()
                                                : bases[0].rows();
        if (dim % 2 != 0) throw ParseError("symplectic dimension must be even");
        return SymplecticSpace::standard(dim / 2);
    }();
    std::vector<LagrangianSubspace> lags;
    for (RatMatrix& b : bases) lags.emplace_back(space, std::move(b));

    std::optional<KMatrix> k;
    if (input.contains("k")) k = validate_k_matrix(int_matrix_from_json(input.at("k")));

    Json j;
    if (lags.size() == 3) {
        long mu = kashiwara_index(space, lags[0], lags[1], lags[2]);
        j["mu_sigma"] = mu;
        if (k) j["mu_k"] = mu_k(*k, space, lags[0], lags[1], lags[2]);
    } else {
        long m123 = kashiwara_index(space, lags[0], lags[1], lags[2]);
        long m124 = kashiwara_index(space, lags[0], lags[1], lags[3]);
        long m134 = kashiwara_index(space, lags[0], lags[2], lags[3]);
        long m234 = kashiwara_index(space, lags[1], lags[2], lags[3]);
        j["mu_sigma"] = Json{{"123", m123}, {"124", m124}, {"134", m134}, {"234", m234}};
        j["cocycle_sum"] = m123 - m124 + m134 - m234;
    }
    emit(out, j);
    return kExitOk;
}

}  // namespace kmx::cli
