#include "charscheme/report_json.hpp"

#include <sstream>

namespace charscheme {

using nlohmann::json;

json params_to_json(const SeifertParams& s) {
    json j;
    json fr = json::array();
    for (const auto& f : s.input_fractions()) fr.push_back(f.get_str());
    j["seifert"] = fr;
    j["p"] = s.p;
    j["q"] = s.q;
    j["euler"] = s.euler.get_str();
    return j;
}

json point_to_json(const CharacterPoint& pt) {
    json j;
    j["kind"] = pt.kind == PointKind::kAbelian ? "abelian" : "irreducible";
    j["exceptional"] = pt.exceptional;
    j["exps"] = pt.exps;
    json coords = json::array();
    for (const auto& c : pt.coords()) coords.push_back(c.str());
    j["coords"] = coords;
    if (const auto* w = std::get_if<AbelianWitness>(&pt.witness)) {
        j["witness"] = {{"m_exp", w->m_exp}, {"a1_exp", w->a1_exp}, {"a2_exp", w->a2_exp}};
    } else {
        const auto& w2 = std::get<IrreducibleWitness>(pt.witness);
        j["witness"] = {{"eps", w2.eps}, {"zeta_exp", w2.zeta_exp}};
    }
    return j;
}

json census_to_json(const Census& c) {
    json j;
    j["params"] = params_to_json(c.params);
    j["homology"] = {
        {"invariant_factors",
         json::array({c.homology.invariant_factors[0].get_str(),
                      c.homology.invariant_factors[1].get_str(),
                      c.homology.invariant_factors[2].get_str()})},
        {"order_h1", c.homology.order_h1.get_str()},
        {"order_h1_z2", c.homology.order_h1_z2.get_str()},
    };
    j["conductor"] = c.conductor;
    json ab = json::array(), irr = json::array();
    for (const auto& pt : c.points)
        (pt.kind == PointKind::kAbelian ? ab : irr).push_back(point_to_json(pt));
    j["abelian"] = ab;
    j["irreducible"] = irr;
    j["x_M"] = c.x_m;
    j["count_formula_lhs"] = c.points.size();
    j["count_formula_rhs"] = c.count_formula_rhs.get_str();
    return j;
}

json ideal_to_json(const IdealPresentation& pres) {
    json j;
    j["params"] = params_to_json(pres.params);
    j["source"] = pres.source == IdealSource::kHardcoded ? "hardcoded" : "generic";
    json gens = json::array();
    for (const auto& g : pres.generators)
        gens.push_back({{"label", g.label}, {"poly", g.poly.str()}});
    j["generators"] = gens;
    return j;
}

json report_to_json(const SchemeReport& rep) {
    json j;
    j["params"] = params_to_json(rep.params);
    j["census"] = census_to_json(rep.cens);
    json tangent = json::array();
    for (const auto& tr : rep.tangent) {
        json t;
        t["conductor"] = tr.analysis_conductor;
        t["jacobian_rank"] = tr.jacobian_rank;
        t["tangent_dim"] = tr.tangent_dim;
        t["obstruction_solvable"] =
            tr.obstruction_solvable ? json(*tr.obstruction_solvable) : json(nullptr);
        t["multiplicity"] = tr.multiplicity ? json(*tr.multiplicity) : json(nullptr);
        t["exceptional"] = tr.point.exceptional;
        tangent.push_back(t);
    }
    j["tangent"] = tangent;
    j["sum_multiplicities"] = rep.sum_multiplicities.get_str();
    j["dimension_formula_rhs"] = rep.dimension_formula_rhs.get_str();
    if (rep.groebner_dimension.has_value() || rep.groebner_basis_size > 0) {
        j["groebner"] = {
            {"dimension", rep.groebner_dimension ? json(*rep.groebner_dimension) : json(nullptr)},
            {"basis_size", rep.groebner_basis_size},
            {"max_degree", rep.groebner_max_degree},
        };
    } else {
        j["groebner"] = nullptr;
    }
    j["reduced"] = rep.reduced;
    j["anomaly"] = rep.anomaly;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["all_checks_pass"] = rep.all_checks_pass();
    return j;
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["params"] = params_to_json(r.params);
        j["ok"] = r.ok;
        if (!r.error.empty()) j["error"] = r.error;
        j["h1_order"] = r.h1_order.get_str();
        j["h1_z2"] = r.h1_z2.get_str();
        j["num_points"] = r.num_points;
        j["x_M"] = r.x_m;
        j["dim_formula"] = r.dim_formula.get_str();
        j["groebner_dim"] = r.groebner_dim ? json(*r.groebner_dim) : json(nullptr);
        j["reduced"] = r.reduced ? json(*r.reduced) : json(nullptr);
        j["anomaly"] = r.anomaly;
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = checks;
        arr.push_back(j);
    }
    return arr;
}

namespace {

json reemit_point(const json& p) {
    json out;
    out["kind"] = p.at("kind").get<std::string>();
    out["exceptional"] = p.at("exceptional").get<bool>();
    out["exps"] = p.at("exps").get<std::vector<long>>();
    out["coords"] = p.at("coords").get<std::vector<std::string>>();
    out["witness"] = p.at("witness");
    return out;
}

json reemit_params(const json& p) {
    json out;
    out["seifert"] = p.at("seifert").get<std::vector<std::string>>();
    out["p"] = p.at("p").get<std::array<long, 3>>();
    out["q"] = p.at("q").get<std::array<long, 3>>();
    out["euler"] = p.at("euler").get<std::string>();
    return out;
}

}  // namespace

json census_json_roundtrip(const json& j) {
    json out;
    out["params"] = reemit_params(j.at("params"));
    out["homology"] = {
        {"invariant_factors", j.at("homology").at("invariant_factors").get<std::vector<std::string>>()},
        {"order_h1", j.at("homology").at("order_h1").get<std::string>()},
        {"order_h1_z2", j.at("homology").at("order_h1_z2").get<std::string>()},
    };
    out["conductor"] = j.at("conductor").get<unsigned>();
    json ab = json::array(), irr = json::array();
    for (const auto& p : j.at("abelian")) ab.push_back(reemit_point(p));
    for (const auto& p : j.at("irreducible")) irr.push_back(reemit_point(p));
    out["abelian"] = ab;
    out["irreducible"] = irr;
    out["x_M"] = j.at("x_M").get<std::size_t>();
    out["count_formula_lhs"] = j.at("count_formula_lhs").get<std::size_t>();
    out["count_formula_rhs"] = j.at("count_formula_rhs").get<std::string>();
    return out;
}

json report_json_roundtrip(const json& j) {
    json out;
    out["params"] = reemit_params(j.at("params"));
    out["census"] = census_json_roundtrip(j.at("census"));
    json tangent = json::array();
    for (const auto& t : j.at("tangent")) {
        json e;
        e["conductor"] = t.at("conductor").get<unsigned>();
        e["jacobian_rank"] = t.at("jacobian_rank").get<std::size_t>();
        e["tangent_dim"] = t.at("tangent_dim").get<int>();
        e["obstruction_solvable"] = t.at("obstruction_solvable");
        e["multiplicity"] = t.at("multiplicity");
        e["exceptional"] = t.at("exceptional").get<bool>();
        tangent.push_back(e);
    }
    out["tangent"] = tangent;
    out["sum_multiplicities"] = j.at("sum_multiplicities").get<std::string>();
    out["dimension_formula_rhs"] = j.at("dimension_formula_rhs").get<std::string>();
    out["groebner"] = j.at("groebner");
    out["reduced"] = j.at("reduced").get<bool>();
    out["anomaly"] = j.at("anomaly").get<bool>();
    json checks = json::array();
    for (const auto& c : j.at("checks"))
        checks.push_back({{"name", c.at("name").get<std::string>()},
                          {"pass", c.at("pass").get<bool>()},
                          {"detail", c.at("detail").get<std::string>()}});
    out["checks"] = checks;
    out["all_checks_pass"] = j.at("all_checks_pass").get<bool>();
    return out;
}

std::string census_text(const Census& c) {
    std::ostringstream os;
    os << "manifold " << c.params.str() << "  e = " << c.params.euler << "\n";
    os << "|H1| = " << c.homology.order_h1 << "  |H1(Z/2)| = " << c.homology.order_h1_z2
       << "  invariant factors (" << c.homology.invariant_factors[0] << ","
       << c.homology.invariant_factors[1] << "," << c.homology.invariant_factors[2] << ")\n";
    os << "conductor N = " << c.conductor << "\n";
    os << "characters: " << c.points.size() << " = " << c.num_abelian << " abelian + "
       << c.num_irreducible << " irreducible;  exceptional x_M = " << c.x_m << "\n";
    for (const auto& pt : c.points) {
        os << (pt.kind == PointKind::kAbelian ? "  A" : "  I") << (pt.exceptional ? "*" : " ");
        auto coords = pt.coords();
        os << " (";
        for (int i = 0; i < kNumVars; ++i) os << (i ? ", " : "") << coords[i].str();
        os << ")\n";
    }
    os << "count formula rhs = " << c.count_formula_rhs << " (matches " << c.points.size() << ")\n";
    return os.str();
}

std::string report_text(const SchemeReport& rep) {
    std::ostringstream os;
    os << census_text(rep.cens);
    os << "tangent analysis:\n";
    for (std::size_t i = 0; i < rep.tangent.size(); ++i) {
        const auto& tr = rep.tangent[i];
        os << "  point " << i << (tr.point.exceptional ? " (exceptional)" : "") << ": rank "
           << tr.jacobian_rank << ", dim T = " << tr.tangent_dim;
        if (tr.obstruction_solvable)
            os << ", order-2 " << (*tr.obstruction_solvable ? "unobstructed" : "obstructed");
        if (tr.multiplicity)
            os << ", multiplicity " << *tr.multiplicity;
        else
            os << ", multiplicity undetermined";
        os << " [N=" << tr.analysis_conductor << "]\n";
    }
    os << "sum of multiplicities = " << rep.sum_multiplicities
       << ", dimension formula = " << rep.dimension_formula_rhs << "\n";
    if (rep.groebner_dimension)
        os << "groebner: dim = " << *rep.groebner_dimension << ", basis " << rep.groebner_basis_size
           << " elements, max degree " << rep.groebner_max_degree << "\n";
    os << "scheme is " << (rep.reduced ? "REDUCED" : "NOT reduced") << "\n";
    os << "checks:\n";
    for (const auto& c : rep.checks)
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
           << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    return os.str();
}

std::string sweep_text(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "params | |H1| | |X(M)| | x_M | dim C[X] | reduced | ok\n";
    std::size_t failures = 0;
    for (const auto& r : rows) {
        os << r.params.str() << " | " << r.h1_order << " | " << r.num_points << " | " << r.x_m
           << " | " << r.dim_formula;
        if (r.groebner_dim) os << " (gb " << *r.groebner_dim << ")";
        os << " | " << (r.reduced ? (*r.reduced ? "yes" : "NO") : "-") << " | "
           << (r.ok ? "pass" : "FAIL");
        if (!r.error.empty()) os << "  error: " << r.error;
        os << "\n";
        if (!r.ok) ++failures;
    }
    os << rows.size() << " manifolds, " << failures << " failures\n";
    return os.str();
}

}  // namespace charscheme
