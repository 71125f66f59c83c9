#include "charscheme/analysis.hpp"

#include <sstream>

namespace charscheme {

namespace {

/// Shared power tables for evaluating many polynomials at one point.
class PointEvaluator {
public:
    PointEvaluator(const std::array<CycloNumber, kNumVars>& coords, int max_degree)
        : n_(coords[0].conductor()) {
        for (int v = 0; v < kNumVars; ++v) {
            powers_[v].reserve(max_degree + 1);
            powers_[v].push_back(CycloNumber::one(n_));
            for (int e = 1; e <= max_degree; ++e) powers_[v].push_back(powers_[v].back() * coords[v]);
        }
    }

    CycloNumber eval(const TracePoly& p) const {
        CycloNumber acc = CycloNumber::zero(n_);
        for (const auto& t : p.terms()) {
            CycloNumber prod = CycloNumber::from_rational(t.coeff, n_);
            for (int v = 0; v < kNumVars; ++v)
                if (t.mono[v] > 0) prod *= powers_[v][t.mono[v]];
            acc += prod;
        }
        return acc;
    }

private:
    unsigned n_;
    std::array<std::vector<CycloNumber>, kNumVars> powers_;
};

/// Point-independent derivative data of a generator list, computed once and
/// reused across all points of a manifold.
struct IdealJet {
    explicit IdealJet(const IdealPresentation& ideal) {
        max_degree = 0;
        for (const auto& g : ideal.generators) max_degree = std::max(max_degree, g.poly.degree());
        first.reserve(ideal.generators.size());
        for (const auto& g : ideal.generators) {
            std::array<TracePoly, kNumVars> row;
            for (int v = 0; v < kNumVars; ++v) row[v] = g.poly.partial(static_cast<Var>(v));
            first.push_back(std::move(row));
        }
    }

    std::vector<std::array<TracePoly, kNumVars>> first;
    int max_degree;
};

CycloMatrix jacobian_at(const IdealPresentation& ideal, const IdealJet& jet, unsigned n,
                        const PointEvaluator& ev) {
    CycloMatrix j(ideal.generators.size(), kNumVars, n);
    for (std::size_t r = 0; r < ideal.generators.size(); ++r)
        for (int v = 0; v < kNumVars; ++v)
            if (!jet.first[r][v].is_zero()) j.at(r, v) = ev.eval(jet.first[r][v]);
    return j;
}

}  // namespace

namespace {

TangentReport tangent_space_jet(const IdealPresentation& ideal, const IdealJet& jet,
                                const CharacterPoint& pt) {
    TangentReport tr;
    tr.point = pt;
    const unsigned n = pt.minimal_conductor();
    tr.analysis_conductor = n;
    auto coords = pt.coords_at(n);
    PointEvaluator ev(coords, jet.max_degree);
    for (const auto& g : ideal.generators) {
        if (!ev.eval(g.poly).is_zero())
            throw std::invalid_argument("point does not lie on the variety (generator " + g.label +
                                        ")");
    }
    CycloMatrix j = jacobian_at(ideal, jet, n, ev);
    tr.tangent_basis = cyclo_kernel(j);
    tr.tangent_dim = static_cast<int>(tr.tangent_basis.size());
    tr.jacobian_rank = kNumVars - tr.tangent_basis.size();

    if (tr.tangent_dim == 1 && pt.exceptional) {
        // scale so dx1 = zeta_1 - zeta_1^{-1} (nonzero at an exceptional point)
        const auto& w = std::get<AbelianWitness>(pt.witness);
        long e = w.a1_exp % static_cast<long>(pt.conductor);
        if (e < 0) e += pt.conductor;
        long scaled = static_cast<long>((static_cast<long long>(e) * n) / pt.conductor);
        CycloNumber zeta1 = CycloNumber::root_of_unity(n, scaled);
        CycloNumber target = zeta1 - zeta1.inverse();
        auto& v = tr.tangent_basis[0];
        if (!v[kX1].is_zero()) {
            CycloNumber factor = target / v[kX1];
            for (auto& c : v) c *= factor;
        }
    }
    return tr;
}

ObstructionResult order2_jet(const IdealPresentation& ideal, const IdealJet& jet,
                             const CharacterPoint& pt, const std::vector<CycloNumber>& v) {
    if (v.size() != kNumVars) throw std::invalid_argument("tangent vector must have 7 entries");
    const unsigned n = v[0].conductor();
    auto coords = pt.coords_at(n);
    PointEvaluator ev(coords, jet.max_degree);
    CycloMatrix j = jacobian_at(ideal, jet, n, ev);
    // the vector must be tangent
    for (std::size_t r = 0; r < j.rows(); ++r) {
        CycloNumber acc = CycloNumber::zero(n);
        for (int c = 0; c < kNumVars; ++c) acc += j.at(r, c) * v[c];
        if (!acc.is_zero()) throw std::invalid_argument("vector is not in the Jacobian kernel");
    }

    ObstructionResult res{false, std::nullopt};
    const mpq_class half(1, 2);
    std::vector<CycloNumber> q(ideal.generators.size(), CycloNumber::zero(n));
    for (std::size_t r = 0; r < ideal.generators.size(); ++r) {
        CycloNumber second = CycloNumber::zero(n);  // v^T H_f v
        for (int a = 0; a < kNumVars; ++a) {
            const TracePoly& fa = jet.first[r][a];
            if (fa.is_zero()) continue;
            for (int b = a; b < kNumVars; ++b) {
                TracePoly fab = fa.partial(static_cast<Var>(b));
                if (fab.is_zero()) continue;
                CycloNumber term = ev.eval(fab) * v[a] * v[b];
                second += (a == b) ? term : term + term;
            }
        }
        q[r] = CycloNumber::from_rational(half, n) * second;
        if (ideal.generators[r].label == "rel5[i=1]")
            res.power_relation_second_derivative = second;
    }
    std::vector<CycloNumber> rhs(q.size(), CycloNumber::zero(n));
    for (std::size_t r = 0; r < q.size(); ++r) rhs[r] = -q[r];
    res.solvable = cyclo_solve(j, rhs).has_value();
    return res;
}

}  // namespace

TangentReport tangent_space(const IdealPresentation& ideal, const CharacterPoint& pt) {
    return tangent_space_jet(ideal, IdealJet(ideal), pt);
}

ObstructionResult order2_obstruction(const IdealPresentation& ideal, const CharacterPoint& pt,
                                     const std::vector<CycloNumber>& v) {
    return order2_jet(ideal, IdealJet(ideal), pt, v);
}

TangentReport& multiplicity_verdict(TangentReport& tr) {
    if (tr.tangent_dim == 0) {
        tr.multiplicity = 1;
        return tr;
    }
    if (tr.tangent_dim == 1 && tr.obstruction_solvable.has_value() &&
        !*tr.obstruction_solvable) {
        tr.multiplicity = 2;
        return tr;
    }
    tr.anomaly = true;  // undetermined: tangent_dim >= 2 or an unobstructed direction
    return tr;
}

bool SchemeReport::all_checks_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

void add_check(SchemeReport& rep, const std::string& name, bool pass, std::string detail = "") {
    rep.checks.push_back({name, pass, std::move(detail)});
}

/// diff relations at an exceptional point: du = 0, eps q_i dy_i =
/// (p_i + q_i) dx_i, and the dx_i proportionality through the eigenvalues.
bool kernel_satisfies_diffs(const SeifertParams& s, const CharacterPoint& pt,
                            const std::vector<CycloNumber>& v, unsigned n,
                            std::string* why) {
    const auto& w = std::get<AbelianWitness>(pt.witness);
    auto root = [&](long e_global) {
        long e = e_global % static_cast<long>(pt.conductor);
        if (e < 0) e += pt.conductor;
        long scaled = static_cast<long>((static_cast<long long>(e) * n) / pt.conductor);
        return CycloNumber::root_of_unity(n, scaled);
    };
    int eps = (w.m_exp % static_cast<long>(pt.conductor)) == 0 ? 1 : -1;
    if (!v[kU].is_zero()) {
        *why = "du != 0";
        return false;
    }
    std::array<long, 3> a_exp = {w.a1_exp, w.a2_exp, w.a1_exp + w.a2_exp};
    std::array<CycloNumber, 3> denom = {CycloNumber::zero(n), CycloNumber::zero(n),
                                        CycloNumber::zero(n)};
    for (int i = 0; i < 3; ++i) {
        CycloNumber zi = root(a_exp[i]);
        denom[i] = zi - zi.inverse();
        if (denom[i].is_zero()) {
            *why = "eigenvalue difference vanishes";
            return false;
        }
        if (v[kX1 + i].is_zero()) {
            *why = "dx_" + std::to_string(i + 1) + " = 0";
            return false;
        }
        CycloNumber lhs = CycloNumber::from_integer(eps * s.q[i], n) * v[kY1 + i];
        CycloNumber rhs = CycloNumber::from_integer(s.p[i] + s.q[i], n) * v[kX1 + i];
        if (lhs != rhs) {
            *why = "eps q_i dy_i != (p_i + q_i) dx_i at i=" + std::to_string(i + 1);
            return false;
        }
    }
    CycloNumber ratio1 = CycloNumber::from_integer(s.p[0], n) * v[kX1] *
                         (CycloNumber::from_integer(s.q[0], n) * denom[0]).inverse();
    for (int i = 1; i < 3; ++i) {
        CycloNumber ratio = CycloNumber::from_integer(s.p[i], n) * v[kX1 + i] *
                            (CycloNumber::from_integer(s.q[i], n) * denom[i]).inverse();
        if (ratio != ratio1) {
            *why = "dX ratios disagree at i=" + std::to_string(i + 1);
            return false;
        }
    }
    return true;
}

}  // namespace

SchemeReport scheme_report(const SeifertParams& s, const ReportOptions& opt) {
    SchemeReport rep;
    rep.params = s;
    rep.cens = census(s);
    rep.dimension_formula_rhs = theorem_dimension_rhs(s, rep.cens.homology);

    IdealPresentation ideal = build_ideal_hardcoded(s);

    // homology determinant identity |H1| = |p1 p2 p3 e|
    mpq_class pe = mpq_class(s.p[0]) * s.p[1] * s.p[2] * s.euler;
    add_check(rep, "homology_order_det", rep.cens.homology.order_h1 == abs(pe.get_num()),
              "|H1| = |p1 p2 p3 e taken exactly|");

    rep.sum_multiplicities = 0;
    bool rank_pattern = true, exceptional_pattern = true, diffs_ok = true, witness_ok = true;
    std::string diff_why;
    IdealJet jet(ideal);
    for (const auto& pt : rep.cens.points) {
        TangentReport tr = tangent_space_jet(ideal, jet, pt);
        if (tr.tangent_dim == 1) {
            ObstructionResult obs = order2_jet(ideal, jet, pt, tr.tangent_basis[0]);
            tr.obstruction_solvable = obs.solvable;
            if (pt.exceptional) {
                if (!obs.power_relation_second_derivative.has_value() ||
                    obs.power_relation_second_derivative->is_zero())
                    witness_ok = false;
                if (!kernel_satisfies_diffs(s, pt, tr.tangent_basis[0], tr.analysis_conductor,
                                            &diff_why))
                    diffs_ok = false;
            }
        }
        multiplicity_verdict(tr);
        if (tr.jacobian_rank != 7 && tr.jacobian_rank != 6) rank_pattern = false;
        if ((tr.jacobian_rank == 6) != pt.exceptional) rank_pattern = false;
        if (pt.exceptional) {
            if (tr.tangent_dim != 1 || tr.obstruction_solvable.value_or(true) ||
                tr.multiplicity != 2)
                exceptional_pattern = false;
        } else if (tr.tangent_dim != 0 || tr.multiplicity != 1) {
            exceptional_pattern = false;
        }
        if (tr.anomaly) rep.anomaly = true;
        if (tr.multiplicity) rep.sum_multiplicities += *tr.multiplicity;
        rep.tangent.push_back(std::move(tr));
    }
    add_check(rep, "no_anomaly", !rep.anomaly, "every multiplicity determined");
    add_check(rep, "jacobian_rank_pattern", rank_pattern, "rank 6 exactly at exceptional points");
    add_check(rep, "exceptional_multiplicity", exceptional_pattern,
              "exceptional: dim 1, obstructed, multiplicity 2; otherwise reduced");
    add_check(rep, "kernel_differentials", diffs_ok, diff_why);
    add_check(rep, "power_relation_witness", witness_ok,
              "second derivative of the u/x1 power relation is nonzero");

    rep.reduced = true;
    for (const auto& tr : rep.tangent)
        if (tr.multiplicity != 1) rep.reduced = false;
    add_check(rep, "reduced_iff_no_exceptional", rep.reduced == (rep.cens.x_m == 0), "");

    add_check(rep, "sum_multiplicities_formula",
              rep.sum_multiplicities == rep.dimension_formula_rhs,
              rep.sum_multiplicities.get_str() + " vs " + rep.dimension_formula_rhs.get_str());

    if (opt.run_groebner) {
        GroebnerBasis gb = groebner_compute(ideal.polys(), MonomialOrder::kDegRevLex, opt.budget);
        rep.groebner_basis_size = gb.size();
        rep.groebner_max_degree = gb.max_degree();
        rep.groebner_dimension = quotient_dimension(gb);
        bool dim_ok = rep.groebner_dimension.has_value() &&
                      mpz_class(static_cast<long>(*rep.groebner_dimension)) ==
                          rep.dimension_formula_rhs &&
                      mpz_class(static_cast<long>(*rep.groebner_dimension)) ==
                          rep.sum_multiplicities;
        add_check(rep, "groebner_dimension", dim_ok,
                  rep.groebner_dimension ? std::to_string(*rep.groebner_dimension) : "infinite");
    }
    if (opt.check_generic_ideal) {
        bool eq = ideals_equal(ideal.polys(), build_ideal_generic(s).polys(), opt.budget);
        add_check(rep, "ideal_cross_derivation", eq, "hardcoded vs generic generators");
    }
    return rep;
}

}  // namespace charscheme
