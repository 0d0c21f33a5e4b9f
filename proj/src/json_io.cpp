#include "lweyl/json_io.hpp"

#include <sstream>

namespace lweyl {

Json root_datum_to_json(const RootDatum& rd) {
    Json j;
    j["type"] = rd.type();
    j["l"] = rd.l();
    j["cartan"] = rd.cartan();
    j["d"] = rd.symmetrizers();
    j["e"] = rd.e();
    j["h"] = rd.coxeter_number();
    Json roots = Json::array(), coroots = Json::array();
    for (auto& pr : rd.positive_roots()) {
        roots.push_back(pr.root.rc);
        coroots.push_back(pr.coroot.cc);
    }
    j["positive_roots"] = roots;
    j["positive_coroots"] = coroots;
    return j;
}

RootDatum root_datum_from_json(const Json& j) {
    RootDatum rd = RootDatum::build(j.at("type").get<std::string>(), j.at("l").get<long long>());
    // cross-validate the serialized combinatorics
    if (j.contains("cartan") && Json(rd.cartan()) != j.at("cartan"))
        throw ConfigError("root datum JSON: cartan matrix mismatch");
    if (j.contains("positive_roots") &&
        j.at("positive_roots").size() != rd.positive_roots().size())
        throw ConfigError("root datum JSON: positive root count mismatch");
    return rd;
}

Json affine_element_to_json(const AffineWeyl& aw, const AffineElement& x) {
    Json j;
    std::vector<int> word;
    for (int g : aw.reduced_word(x)) word.push_back(g);
    j["word"] = word;
    const auto& fin = aw.finite();
    int n = aw.datum().rank();
    Json mat = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < n; ++k) row.push_back(fin.fund_matrix(x.w)[i * n + k]);
        mat.push_back(row);
    }
    j["finite"] = mat;
    j["translation"] = x.mu;
    return j;
}

Json character_to_json(const Character& ch) {
    Json j;
    j["window"] = {{"top", ch.window().top.fw}, {"depth", ch.window().depth}};
    Json coeffs = Json::array();
    for (auto& [w, c] : ch.coeffs()) coeffs.push_back({{"weight", w.fw}, {"coeff", c.get_str()}});
    j["coeffs"] = coeffs;
    return j;
}

Json gkm_function_to_json(const AffineWeyl& aw, const GkmFunction& f) {
    Json j;
    j["J"] = f.J;
    j["window"] = f.window;
    Json vals = Json::array();
    for (auto& [y, v] : f.values)
        vals.push_back({{"point", aw.el_str(y)}, {"value", v.str()}});
    j["values"] = vals;
    return j;
}

Json center_function_to_json(const CenterFunction& f, int nvars) {
    Json j;
    Json vals = Json::array();
    for (auto& [w, v] : f.values) vals.push_back({{"weight", w.fw}, {"value", v.str()}});
    j["values"] = vals;
    (void)nvars;
    return j;
}

Json report_to_json(const GkmReport& rep) {
    Json j;
    j["status"] = rep.ok ? "PASS" : "FAIL";
    j["violations"] = rep.violations;
    j["skipped"] = rep.skipped;
    return j;
}

Json matrix_to_json(const AffineWeyl& aw, const TranslationMatrix& H) {
    Json j;
    j["omega"] = H.omega.fw;
    j["base"] = H.base.fw;
    Json ord = Json::array();
    for (auto& x : H.order) ord.push_back(aw.el_str(x));
    j["order"] = ord;
    Json rows = Json::array();
    for (auto& row : H.entries) {
        Json r = Json::array();
        for (auto& v : row) r.push_back(v.str());
        rows.push_back(r);
    }
    j["entries"] = rows;
    return j;
}

Json identity_lines_to_json(const std::vector<IdentityLine>& lines) {
    Json arr = Json::array();
    for (auto& line : lines) {
        Json j;
        j["identity"] = line.name;
        j["status"] = line.ok ? "PASS" : "FAIL";
        if (!line.ok) j["witness"] = line.witness;
        arr.push_back(j);
    }
    return arr;
}

std::string weight_str(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.fw.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.fw[i]);
    }
    return s;
}

Weight parse_weight(const std::string& s, int rank) {
    Weight w{Vec{}};
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        w.fw.push_back(std::stoll(tok));
    }
    if ((int)w.fw.size() != rank)
        throw ConfigError("weight '" + s + "' has " + std::to_string(w.fw.size()) +
                          " coordinates, expected " + std::to_string(rank));
    return w;
}

}  // namespace lweyl
