#include "rootorbits/json_io.hpp"

namespace rootorbits {

Json to_json(const IVec& v) {
    Json a = Json::array();
    for (Int x : v) a.push_back(x);
    return a;
}

Json to_json(const QVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(x.str());
    return a;
}

Json to_json(const std::vector<IVec>& vs) {
    Json a = Json::array();
    for (const IVec& v : vs) a.push_back(to_json(v));
    return a;
}

Json word_to_json(const std::vector<int>& word) {
    Json a = Json::array();
    for (int letter : word) a.push_back(letter + 1);
    return a;
}

Json to_json(const CartanData& cd) {
    Json j;
    j["n"] = cd.n;
    Json rows = Json::array();
    for (int i = 0; i < cd.n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < cd.n; ++k) row.push_back(cd.A(i, k));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    Json d = Json::array();
    for (Int x : cd.d) d.push_back(x);
    j["symmetrizers"] = d;
    j["typeclass"] = typeclass_name(cd.typeclass);
    if (!cd.label.empty()) j["label"] = cd.label;
    return j;
}

Json to_json(const CartanData& cd, const AffineFrame& fr) {
    Json j = to_json(cd);
    j["delta"] = to_json(fr.delta);
    j["aff"] = fr.aff + 1;
    j["f"] = fr.f;
    j["theta"] = to_json(fr.theta);
    return j;
}

Json to_json(const DualFunctional& f) {
    Json j;
    j["alpha_row"] = to_json(f.alpha_row);
    j["rho_coords"] = to_json(f.rho_coords);
    return j;
}

Json to_json(const GammaData& gd) {
    Json j;
    j["gamma"] = to_json(gd.gamma);
    j["phi"] = to_json(gd.phi);
    j["order_on_Uc"] = gd.order_on_Uc;
    return j;
}

Json to_json(const TransversalInf& tv) {
    Json j;
    std::vector<IVec> out = tv.out, in = tv.in;
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    j["out"] = to_json(out);
    j["in"] = to_json(in);
    return j;
}

Json to_json(const OrbitReport& rep) {
    Json j;
    j["seed"] = to_json(rep.seed);
    j["kind"] = rep.kind == OrbitKind::finite ? "finite" : "infinite";
    j["imaginary"] = rep.imaginary;
    j["members"] = to_json(rep.members);
    j["sign"] = rep.sign == 0 ? "mixed" : (rep.sign > 0 ? "positive" : "negative");
    if (rep.transversal_hit) {
        j["transversal_hit"] = to_json(*rep.transversal_hit);
        j["hit_power"] = *rep.hit_power;
    }
    return j;
}

Json to_json(const UpsilonData& ud) {
    Json j;
    j["roots"] = to_json(ud.roots);
    j["canonical_simples"] = to_json(ud.canonical_simples);
    j["ordered_simples"] = to_json(ud.ordered_simples);
    Json comps = Json::array();
    for (const UpsilonComponent& comp : ud.components) {
        Json cj;
        cj["chain"] = to_json(comp.chain);
        cj["beta0"] = to_json(comp.beta0);
        cj["kappa"] = comp.kappa;
        cj["omega"] = to_json(comp.omega);
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["omega"] = to_json(ud.omega);
    Json kap = Json::array();
    for (const UpsilonComponent& comp : ud.components)
        for (const IVec& b : comp.omega) {
            Json e;
            e["beta"] = to_json(b);
            e["kappa"] = comp.kappa;
            kap.push_back(e);
        }
    j["kappa_of"] = kap;
    return j;
}

Json to_json(const VerifyReport& rep) {
    Json j;
    j["system"] = rep.system;
    j["word"] = word_to_json(rep.word);
    Json checks = Json::array();
    for (const CheckResult& c : rep.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["pass"] = rep.all_pass();
    return j;
}

Json to_json(const TableReport& rep) {
    Json j;
    Json rows = Json::array();
    for (const TableRowDiff& r : rep.rows) {
        Json rj;
        rj["row"] = r.label;
        rj["match"] = r.match;
        if (!r.detail.empty()) rj["detail"] = r.detail;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    j["pass"] = rep.all_match();
    return j;
}

MatrixInput parse_matrix_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, true, true);
    MatrixInput in;
    const Json* rows = nullptr;
    if (j.is_array()) {
        rows = &j;
    } else if (j.is_object() && j.contains("matrix")) {
        rows = &j["matrix"];
        if (j.contains("aff")) in.aff = (int)j["aff"] - 1;
        if (j.contains("label")) in.label = j["label"];
    } else {
        fail(Err::BadInput, "expected a JSON matrix or an object with a \"matrix\" field");
    }
    if (!rows->is_array() || rows->empty()) fail(Err::BadInput, "matrix must be a nonempty array");
    int n = (int)rows->size();
    in.matrix = IMat(n, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = (*rows)[i];
        if (!row.is_array() || (int)row.size() != n)
            fail(Err::BadInput, "matrix rows must all have length n");
        for (int k = 0; k < n; ++k) {
            if (!row[k].is_number_integer()) fail(Err::BadInput, "matrix entries must be integers");
            in.matrix(i, k) = (Int)row[k];
        }
    }
    return in;
}

} // namespace rootorbits
