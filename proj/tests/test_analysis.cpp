#include <doctest.h>

#include "charscheme/analysis.hpp"

using namespace charscheme;

namespace {

SeifertParams params(long a1, long b1, long a2, long b2, long a3, long b3) {
    return params_normalize({Fraction{a1, b1}, Fraction{a2, b2}, Fraction{a3, b3}});
}

}  // namespace

TEST_CASE("every point of the worked manifold is reduced (rank 7)") {
    SeifertParams s = params(-1, 2, -1, 3, 1, 5);
    IdealPresentation ideal = build_ideal_hardcoded(s);
    Census c = census(s);
    for (const auto& pt : c.points) {
        TangentReport tr = tangent_space(ideal, pt);
        CHECK(tr.jacobian_rank == 7);
        CHECK(tr.tangent_dim == 0);
        multiplicity_verdict(tr);
        CHECK(tr.multiplicity == 1);
        CHECK(!tr.anomaly);
    }
}

TEST_CASE("exceptional point of S2(-1/3,-1/3,1/3): rank 6, obstructed, multiplicity 2") {
    SeifertParams s = params(-1, 3, -1, 3, 1, 3);
    IdealPresentation ideal = build_ideal_hardcoded(s);
    Census c = census(s);
    int exceptional_seen = 0;
    for (const auto& pt : c.points) {
        TangentReport tr = tangent_space(ideal, pt);
        if (!pt.exceptional) {
            CHECK(tr.jacobian_rank == 7);
            continue;
        }
        ++exceptional_seen;
        CHECK(tr.jacobian_rank == 6);
        REQUIRE(tr.tangent_dim == 1);
        const auto& v = tr.tangent_basis[0];
        const unsigned n = tr.analysis_conductor;

        // du = 0, dx_i != 0
        CHECK(v[kU].is_zero());
        for (int i : {kX1, kX2, kX3}) CHECK(!v[i].is_zero());

        // eps q_i dy_i = (p_i + q_i) dx_i, here eps = 1, q_i = 1, p_i = 3
        for (int i = 0; i < 3; ++i) {
            CHECK(CycloNumber::from_integer(s.q[i], n) * v[kY1 + i] ==
                  CycloNumber::from_integer(s.p[i] + s.q[i], n) * v[kX1 + i]);
        }

        // normalization: dx1 = zeta_1 - zeta_1^{-1}
        const auto& w = std::get<AbelianWitness>(pt.witness);
        long e = ((w.a1_exp % (long)pt.conductor) + pt.conductor) % pt.conductor;
        long scaled = static_cast<long>((static_cast<long long>(e) * n) / pt.conductor);
        CycloNumber z1 = CycloNumber::root_of_unity(n, scaled);
        CHECK(v[kX1] == z1 - z1.inverse());

        // order-2 obstruction: unsolvable, with a nonzero direct witness
        ObstructionResult obs = order2_obstruction(ideal, pt, v);
        CHECK(!obs.solvable);
        REQUIRE(obs.power_relation_second_derivative.has_value());
        CHECK(!obs.power_relation_second_derivative->is_zero());
        // closed form -2 p1^2 eps^{q1} (dx1)^2 / (x1^2 - 4)
        auto coords = pt.coords_at(n);
        CycloNumber x1 = coords[kX1];
        CycloNumber expected = CycloNumber::from_integer(-2 * s.p[0] * s.p[0], n) * v[kX1] *
                               v[kX1] *
                               (x1 * x1 - CycloNumber::from_integer(4, n)).inverse();
        CHECK(*obs.power_relation_second_derivative == expected);

        tr.obstruction_solvable = obs.solvable;
        multiplicity_verdict(tr);
        CHECK(tr.multiplicity == 2);
        CHECK(!tr.anomaly);
    }
    CHECK(exceptional_seen == 1);
}

TEST_CASE("tangent_space rejects points off the variety") {
    SeifertParams s = params(-1, 2, -1, 3, 1, 5);
    IdealPresentation ideal = build_ideal_hardcoded(s);
    Census c = census(s);
    CharacterPoint bad = c.points.front();
    bad.exps[kX1] = (bad.exps[kX1] + 1) % bad.conductor;
    CHECK_THROWS_AS(tangent_space(ideal, bad), std::invalid_argument);
}

TEST_CASE("sanity: a slab ideal makes the obstruction trivially solvable") {
    // replace the ideal by { u - u(pt) }: Hessians vanish, so w = 0 works
    SeifertParams s = params(-1, 3, -1, 3, 1, 3);
    Census c = census(s);
    const CharacterPoint* ex = nullptr;
    for (const auto& pt : c.points)
        if (pt.exceptional) ex = &pt;
    REQUIRE(ex != nullptr);
    IdealPresentation slab;
    slab.params = s;
    slab.generators.push_back(
        {"u-2", TracePoly::variable(kU) - TracePoly::constant(2)});
    TangentReport tr = tangent_space(slab, *ex);
    CHECK(tr.tangent_dim == 6);
    ObstructionResult obs = order2_obstruction(slab, *ex, tr.tangent_basis[0]);
    CHECK(obs.solvable);
    multiplicity_verdict(tr);
    CHECK(tr.anomaly);  // dim >= 2 is flagged, never guessed
}

TEST_CASE("order2_obstruction rejects non-kernel vectors") {
    SeifertParams s = params(-1, 3, -1, 3, 1, 3);
    IdealPresentation ideal = build_ideal_hardcoded(s);
    Census c = census(s);
    const CharacterPoint* ex = nullptr;
    for (const auto& pt : c.points)
        if (pt.exceptional) ex = &pt;
    REQUIRE(ex != nullptr);
    TangentReport tr = tangent_space(ideal, *ex);
    std::vector<CycloNumber> v(kNumVars, CycloNumber::zero(tr.analysis_conductor));
    v[kU] = CycloNumber::one(tr.analysis_conductor);
    CHECK_THROWS_AS(order2_obstruction(ideal, *ex, v), std::invalid_argument);
}

TEST_CASE("scheme_report: full pipeline on three manifolds") {
    SUBCASE("reduced example") {
        SchemeReport rep = scheme_report(params(-1, 2, -1, 3, 1, 5));
        CHECK(rep.cens.points.size() == 12);
        CHECK(rep.sum_multiplicities == 12);
        CHECK(rep.groebner_dimension == std::size_t(12));
        CHECK(rep.reduced);
        CHECK(rep.all_checks_pass());
    }
    SUBCASE("non-reduced example") {
        SchemeReport rep = scheme_report(params(-1, 3, -1, 3, 1, 3));
        CHECK(rep.cens.points.size() == 6);
        CHECK(rep.cens.x_m == 1);
        CHECK(rep.sum_multiplicities == 7);
        CHECK(rep.groebner_dimension == std::size_t(7));
        CHECK(!rep.reduced);
        CHECK(rep.all_checks_pass());
    }
    SUBCASE("even third fiber") {
        SchemeReport rep = scheme_report(params(-1, 3, -1, 3, 1, 4));
        CHECK(rep.cens.points.size() == 11);
        CHECK(rep.sum_multiplicities == 11);
        CHECK(rep.groebner_dimension == std::size_t(11));
        CHECK(rep.reduced);
        CHECK(rep.all_checks_pass());
    }
}

TEST_CASE("redundant differentials: rows for rel6/rel8 lie in the span of the rest") {
    SeifertParams s = params(-1, 3, -1, 3, 1, 3);
    IdealPresentation ideal = build_ideal_hardcoded(s);
    Census c = census(s);
    for (const auto& pt : c.points) {
        if (!pt.exceptional) continue;
        unsigned n = pt.minimal_conductor();
        auto coords = pt.coords_at(n);
        auto rows_for = [&](auto&& keep) {
            std::vector<std::vector<CycloNumber>> rows;
            for (const auto& g : ideal.generators) {
                if (!keep(g.label)) continue;
                std::vector<CycloNumber> row;
                for (int v = 0; v < kNumVars; ++v)
                    row.push_back(g.poly.partial(static_cast<Var>(v)).eval(coords));
                rows.push_back(std::move(row));
            }
            return rows;
        };
        auto core = rows_for([](const std::string& l) {
            return l.rfind("rel5", 0) == 0 || l.rfind("rel9", 0) == 0 || l.rfind("rel7", 0) == 0 ||
                   l == "rel4";
        });
        auto all = rows_for([](const std::string&) { return true; });
        auto to_matrix = [&](const std::vector<std::vector<CycloNumber>>& rows) {
            CycloMatrix m(rows.size(), kNumVars, n);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (int v = 0; v < kNumVars; ++v) m.at(r, v) = rows[r][v];
            return m;
        };
        CHECK(cyclo_rank(to_matrix(core)) == cyclo_rank(to_matrix(all)));
    }
}
