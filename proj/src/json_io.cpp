#include "gmi/json_io.hpp"

namespace gmi {

Json monomial_json(const MomentMonomial& mono, int dim) {
    Json arr = Json::array();
    for (const auto& idx : mono) {
        Json ix = Json::array({int(idx.p), int(idx.q)});
        if (dim == 3) ix.push_back(int(idx.r));
        arr.push_back(ix);
    }
    return arr;
}

Json polynomial_json(const MomentPolynomial& p) {
    Json arr = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json term;
        term["coeff"] = coeff.str();
        term["monomial"] = monomial_json(mono, p.dim());
        arr.push_back(term);
    }
    return arr;
}

Json moment_vector_json(const MomentVector& mv) {
    Json obj;
    obj["dim"] = mv.dim();
    obj["max_order"] = mv.max_order();
    Json entries;
    for (const auto& idx : mv.indices()) {
        std::string key = std::to_string(idx.p) + std::to_string(idx.q);
        if (mv.dim() == 3) key += std::to_string(idx.r);
        entries[key] = mv.at(idx);
    }
    obj["entries"] = entries;
    return obj;
}

Json affine_map_json(const AffineMap& m) {
    Json obj;
    obj["dim"] = m.dim;
    Json lin = Json::array();
    for (int i = 0; i < m.dim; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim; ++j) row.push_back(m.linear[i][j]);
        lin.push_back(row);
    }
    obj["linear"] = lin;
    Json tr = Json::array();
    for (int i = 0; i < m.dim; ++i) tr.push_back(m.translation[i]);
    obj["translation"] = tr;
    obj["det"] = m.det();
    return obj;
}

Json invariance_report_json(const std::string& name, Group group, const InvarianceReport& rep) {
    Json obj;
    obj["invariant"] = name;
    obj["group"] = to_string(group);
    obj["seed"] = rep.seed;
    obj["tol"] = rep.tol;
    obj["baseline"] = rep.baseline;
    Json per = Json::array();
    for (const auto& s : rep.samples) {
        Json e;
        e["map"] = affine_map_json(s.map);
        e["value"] = s.value;
        e["rel_err"] = s.rel_err;
        per.push_back(e);
    }
    obj["per_transform"] = per;
    obj["pass"] = rep.pass;
    return obj;
}

Json catalog_json() {
    Json arr = Json::array();
    for (Group g : {Group::Similarity, Group::Affine, Group::Rotation3D}) {
        auto checks = verify_catalog(g);
        const auto& entries = get_catalog(g);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& inv = entries[i];
            Json e;
            e["name"] = inv.name;
            e["group"] = to_string(inv.group);
            e["core"] = inv.core.str();
            e["reference"] = polynomial_json(inv.reference);
            e["k"] = inv.k;
            e["skew"] = inv.skew;
            e["verified"] = checks[i].match;
            e["scalar"] = checks[i].scalar.str();
            arr.push_back(e);
        }
    }
    return arr;
}

Json discovery_report_json(const DiscoveryReport& rep) {
    Json obj;
    Json spec;
    spec["dim"] = rep.spec.dim;
    spec["group"] = to_string(rep.spec.group);
    spec["n_pnt"] = rep.spec.n_pnt;
    spec["n_cnt"] = rep.spec.n_cnt;
    spec["max_factors"] = rep.spec.effective_max_factors();
    spec["require_true_invariants"] = rep.spec.require_true_invariants;
    spec["budget"] = rep.spec.budget;
    obj["spec"] = spec;
    obj["target"] = rep.target;
    obj["seed"] = rep.seed;

    Json counts;
    counts["raw"] = rep.stats.raw;
    counts["canonical"] = rep.stats.canonical;
    counts["skew"] = rep.stats.skew_dropped;
    counts["zero"] = rep.zero_dropped;
    counts["duplicate"] = rep.duplicate_dropped;
    counts["candidates"] = rep.candidates.size();
    counts["independent"] = rep.kept.size();
    obj["counts"] = counts;

    Json elim = Json::array();
    for (const auto& e : rep.eliminations) {
        Json x;
        x["core"] = e.core;
        x["reason"] = e.reason;
        if (!e.duplicate_of.empty()) x["duplicate_of"] = e.duplicate_of;
        elim.push_back(x);
    }
    obj["eliminations"] = elim;

    Json kept = Json::array();
    for (std::size_t pos : rep.kept) {
        const auto& c = rep.candidates[pos];
        Json e;
        e["core"] = c.core.str();
        e["polynomial"] = polynomial_json(c.polynomial);
        e["k"] = c.k;
        e["order"] = c.order;
        e["degree"] = c.degree;
        e["candidate_index"] = pos;
        kept.push_back(e);
    }
    obj["independent_set"] = kept;
    obj["rank"] = rep.rank;
    obj["incomplete"] = rep.incomplete;
    return obj;
}

}  // namespace gmi
