#include "qloop/serialize.hpp"

#include <sstream>

namespace qloop {

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j)) entries.push_back(Json::array({e.row, j, e.value.to_string()}));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const Weight& w) { return w.coeffs; }

Json to_json(const DrinfeldPoly& p) {
    Json slots = Json::array();
    for (const auto& poly : p.polys) {
        Json c = Json::array();
        for (const auto& s : poly) c.push_back(s.to_string());
        slots.push_back(c);
    }
    return {{"n", p.n}, {"field", p.field.name()}, {"coefficients", slots}, {"text", p.to_string()}};
}

Json to_json(const ModuleRep& m) {
    Json basis = Json::array(), weights = Json::array(), gens = Json::object(), params = Json::array();
    for (const auto& b : m.basis) basis.push_back(Json(b));
    for (const auto& w : m.weights) weights.push_back(to_json(w));
    for (const auto& [key, g] : m.gens) gens[key.to_string()] = to_json(g);
    for (const auto& a : m.params) params.push_back(to_json(a));
    Json j = {{"n", m.n},           {"flavor", flavor_name(m.flavor)}, {"field", m.field.name()}, {"dim", m.dim()},
              {"basis", basis},     {"weights", weights},              {"generators", gens},     {"max_power", m.max_power},
              {"affine", m.affine}, {"dual", m.dual},                  {"xis", m.xis},           {"params", params}};
    if (m.flavor != Flavor::Generic) j["l"] = m.l;
    if (m.dpoly) j["drinfeld_polynomial"] = to_json(*m.dpoly);
    return j;
}

Json to_json(const CriterionResult& c) {
    Json v = Json::array();
    for (const auto& x : c.violations)
        v.push_back({{"k", x.k}, {"k_prime", x.k2}, {"t", x.t}, {"sign", x.sign > 0 ? "+" : "-"}});
    return {{"predicted", c.holds ? "irreducible" : "reducible"}, {"violations", v}};
}

Json to_json(const RelationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j = {{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) j["witness"] = c.witness;
        checks.push_back(j);
    }
    return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

Json to_json(const RData& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back({{"k", t.k}, {"rho", to_json(t.rho)}, {"P", to_json(t.P)}});
    return {{"n", r.n},
            {"xi", r.xi},
            {"zeta", r.zeta},
            {"a", to_json(r.a)},
            {"b", to_json(r.b)},
            {"normalization", normalization_name(r.normalization)},
            {"terms", terms},
            {"assembled", to_json(r.assembled)}};
}

Json to_json(const RestrictedWeightData& t) { return {{"l", t.l}, {"residue", t.residue}, {"level", t.level}}; }

Json to_json(const IrreducibilityVerdict& v, const std::optional<CriterionResult>& prediction) {
    Json j = {{"verdict", v.irreducible ? "irreducible" : "reducible"},
              {"strategy", v.strategy},
              {"dim", v.dim},
              {"seed", v.seed},
              {"weight_separated", v.weight_separated},
              {"transcript", v.transcript}};
    if (v.certificate) {
        Json basis = Json::array();
        for (const auto& vec : v.certificate->basis) {
            Json row = Json::array();
            for (const auto& s : vec) row.push_back(s.to_string());
            basis.push_back(row);
        }
        j["certificate_basis"] = basis;
    }
    if (prediction) {
        Json c = to_json(*prediction);
        j["criterion_prediction"] = c["predicted"];
        j["violations"] = c["violations"];
    }
    return j;
}

Json to_json(const RootVerdict& v) {
    Json j = to_json(v.verdict, v.prediction);
    j["l"] = v.l;
    j["l_flagged"] = v.l_flagged;
    j["collision_fallback"] = v.collision_fallback;
    j["agrees"] = v.agrees;
    return j;
}

std::string matrix_csv(const Matrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            std::string s = m.at(i, j).to_string();
            if (s.find(',') != std::string::npos) out << '"' << s << '"';
            else out << s;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qloop
