#include "kmx/json_io.hpp"

namespace kmx {

Json json_int(const Int& v) {
    static const Int kMax = (Int(1) << 53);
    if (abs(v) <= kMax) return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer literal: " + j.get<std::string>());
        }
    }
    throw ParseError("expected an integer (number or decimal string)");
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s, 10));
        Int num(s.substr(0, slash), 10);
        Int den(s.substr(slash + 1), 10);
        if (den == 0) throw ParseError("zero denominator: " + s);
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json to_json(const Phase& p) { return Json(p.str()); }

Phase phase_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("phase must be a \"p/q\" string");
    return Phase::parse(j.get<std::string>());
}

Json to_json(const HalfPowerScalar& s) {
    Json j;
    j["base"] = json_int(s.base);
    j["half_exponent"] = s.half_exponent;
    return j;
}

HalfPowerScalar half_power_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("half_exponent"))
        throw ParseError("half-power scalar needs \"base\" and \"half_exponent\"");
    HalfPowerScalar s;
    s.base = int_from_json(j.at("base"));
    if (s.base <= 0) throw ParseError("half-power base must be positive");
    s.half_exponent = j.at("half_exponent").get<long>();
    return s;
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["entries"] = std::move(rows);
    return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
    const Json* entries = &j;
    if (j.is_object()) {
        if (!j.contains("entries")) throw ParseError("matrix object needs \"entries\"");
        entries = &j.at("entries");
    }
    if (!entries->is_array() || entries->empty())
        throw ParseError("matrix entries must be a nonempty array of rows");
    std::vector<std::vector<Int>> rows;
    for (const Json& r : *entries) {
        if (!r.is_array()) throw ParseError("matrix row must be an array");
        std::vector<Int> row;
        for (const Json& x : r) row.push_back(int_from_json(x));
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows);
}

Json to_json(const SignatureTriple& s) {
    Json j;
    j["n_plus"] = s.n_plus;
    j["n_minus"] = s.n_minus;
    j["n_zero"] = s.n_zero;
    j["sigma"] = s.signature();
    return j;
}

namespace {
Json label_to_json(const Label& lab) {
    Json flat = Json::array();
    for (const Element& e : lab)
        for (const Int& c : e.coords) flat.push_back(json_int(c));
    return flat;
}
}  // namespace

Json to_json(const ModularData& d) {
    Json j;
    j["genus"] = d.genus;
    j["invariant_factors"] = Json::array();
    for (const Int& f : d.group.invariant_factors())
        j["invariant_factors"].push_back(json_int(f));
    Json labels = Json::array();
    for (const Label& lab : d.labels) labels.push_back(label_to_json(lab));
    j["labels"] = std::move(labels);
    Json t = Json::array();
    for (const Phase& p : d.t_diag) t.push_back(to_json(p));
    j["t"] = std::move(t);
    if (!d.omega.empty()) {
        Json om = Json::array();
        for (const auto& row : d.omega) {
            Json r = Json::array();
            for (const Phase& p : row) r.push_back(to_json(p));
            om.push_back(std::move(r));
        }
        j["omega"] = std::move(om);
    }
    j["norm"] = to_json(d.norm);
    return j;
}

Json to_json(const ReconstructedTheory& th) {
    Json j;
    j["order"] = th.order;
    j["vacuum"] = th.vacuum;
    j["add"] = th.add;
    Json q = Json::array();
    for (const Phase& p : th.q) q.push_back(to_json(p));
    j["q"] = std::move(q);
    Json om = Json::array();
    for (const auto& row : th.omega) {
        Json r = Json::array();
        for (const Phase& p : row) r.push_back(to_json(p));
        om.push_back(std::move(r));
    }
    j["omega"] = std::move(om);
    return j;
}

Json to_json(const BettiData& b) {
    Json j;
    j["h1"] = b.h1;
    j["h1_rel"] = b.h1_rel;
    j["h0"] = b.h0;
    j["h0_rel"] = b.h0_rel;
    return j;
}

BettiData betti_from_json(const Json& j) {
    BettiData b;
    b.h1 = j.value("h1", 0L);
    b.h1_rel = j.value("h1_rel", 0L);
    b.h0 = j.value("h0", 0L);
    b.h0_rel = j.value("h0_rel", 0L);
    return b;
}

Json to_json(const GluingData& d) {
    Json j;
    j["x"] = to_json(d.x);
    j["x_cut"] = to_json(d.x_cut);
    j["h1_sigma"] = d.h1_sigma;
    j["h1_boundary_cut"] = d.h1_boundary_cut;
    j["dim_lambda_cap_c"] = d.dim_lambda_cap_c;
    return j;
}

GluingData gluing_from_json(const Json& j) {
    GluingData d;
    d.x = betti_from_json(j.at("x"));
    d.x_cut = betti_from_json(j.at("x_cut"));
    d.h1_sigma = j.value("h1_sigma", 0L);
    d.h1_boundary_cut = j.value("h1_boundary_cut", 0L);
    d.dim_lambda_cap_c = j.value("dim_lambda_cap_c", 0L);
    return d;
}

RatMatrix rat_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("rational matrix must be a nonempty array of rows");
    std::size_t cols = 0;
    std::vector<std::vector<Rat>> rows;
    for (const Json& r : j) {
        if (!r.is_array()) throw ParseError("rational matrix row must be an array");
        std::vector<Rat> row;
        for (const Json& x : r) {
            if (x.is_string())
                row.push_back(rat_from_string(x.get<std::string>()));
            else if (x.is_number_integer())
                row.push_back(Rat(Int(static_cast<long>(x.get<long long>()))));
            else
                throw ParseError("rational entry must be \"p/q\" or an integer");
        }
        if (cols == 0) cols = row.size();
        if (row.size() != cols) throw ParseError("ragged rational matrix");
        rows.push_back(std::move(row));
    }
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = rows[i][k];
    return m;
}

Json to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return j;
}

}  // namespace kmx
