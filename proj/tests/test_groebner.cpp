#include <doctest.h>

#include "charscheme/groebner.hpp"
#include "charscheme/presentation.hpp"

using namespace charscheme;

namespace {

const TracePoly vu = TracePoly::variable(kU);
const TracePoly vx1 = TracePoly::variable(kX1);
const TracePoly vy1 = TracePoly::variable(kY1);

SeifertParams params(long a1, long b1, long a2, long b2, long a3, long b3) {
    return params_normalize({Fraction{a1, b1}, Fraction{a2, b2}, Fraction{a3, b3}});
}

TracePoly spoly(const TracePoly& f, const TracePoly& g, MonomialOrder ord) {
    // both monic
    Monomial lf = f.terms().front().mono, lg = g.terms().front().mono;
    for (const auto& t : f.terms())
        if (mono_cmp(ord, t.mono, lf) > 0) lf = t.mono;
    for (const auto& t : g.terms())
        if (mono_cmp(ord, t.mono, lg) > 0) lg = t.mono;
    Monomial l = mono_lcm(lf, lg);
    return f.mul_term(1, mono_div(l, lf)) - g.mul_term(1, mono_div(l, lg));
}

}  // namespace

TEST_CASE("single linear generator") {
    TracePoly g = vu - TracePoly::constant(2);
    GroebnerBasis gb = groebner_compute({g});
    REQUIRE(gb.size() == 1);
    CHECK(gb.basis[0] == g);
}

TEST_CASE("monomial ideal stays put and S-polynomials vanish") {
    TracePoly f1 = vx1 * vx1;
    TracePoly f2 = vx1 * vy1;
    GroebnerBasis gb = groebner_compute({f1, f2});
    REQUIRE(gb.size() == 2);
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j)
            CHECK(normal_form(spoly(gb.basis[i], gb.basis[j], gb.order), gb).is_zero());
}

TEST_CASE("normal form basics") {
    TracePoly f1 = vx1 * vx1 - vy1;
    TracePoly f2 = vx1 * vx1 * vx1 - vx1;
    GroebnerBasis gb = groebner_compute({f1, f2});
    CHECK(normal_form(f1, gb).is_zero());
    CHECK(normal_form(f2, gb).is_zero());
    CHECK(normal_form(TracePoly::constant(1), gb) == TracePoly::constant(1));
    TracePoly p = vx1 * vy1 + vu;
    CHECK(normal_form(normal_form(p, gb), gb) == normal_form(p, gb));
}

TEST_CASE("quotient dimension: maximal ideal and positive-dimensional flag") {
    std::vector<TracePoly> all_vars;
    for (int v = 0; v < kNumVars; ++v) all_vars.push_back(TracePoly::variable(static_cast<Var>(v)));
    GroebnerBasis gb = groebner_compute(all_vars);
    CHECK(quotient_dimension(gb) == std::size_t(1));

    GroebnerBasis inf = groebner_compute({vu * vu});
    CHECK(!quotient_dimension(inf).has_value());
}

TEST_CASE("budget exceeded is a distinct outcome") {
    SeifertParams s = params(-1, 2, -1, 3, 1, 5);
    auto gens = build_ideal_hardcoded(s).polys();
    BuchbergerBudget tiny{.max_pairs = 3};
    CHECK_THROWS_AS(groebner_compute(gens, MonomialOrder::kDegRevLex, tiny), BudgetExceeded);
}

TEST_CASE("worked manifold: dimension 12 and Buchberger criterion post-hoc") {
    SeifertParams s = params(-1, 2, -1, 3, 1, 5);
    auto gens = build_ideal_hardcoded(s).polys();
    GroebnerBasis gb = groebner_compute(gens);
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
    CHECK(quotient_dimension(gb) == std::size_t(12));
    // no leading monomial divides another
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (i == j) continue;
            CHECK(!mono_divides(gb.basis[i].terms().front().mono,
                                gb.basis[j].terms().front().mono));
        }
    // every S-polynomial reduces to zero
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j)
            CHECK(normal_form(spoly(gb.basis[i], gb.basis[j], gb.order), gb).is_zero());
}

TEST_CASE("the symmetry extras rel1[i=3], rel8[i=3] are redundant") {
    SeifertParams s = params(-1, 2, -1, 3, 1, 5);
    IdealPresentation pres = build_ideal_hardcoded(s);
    std::vector<TracePoly> without;
    TracePoly rel1_3, rel8_3;
    for (const auto& g : pres.generators) {
        if (g.label == "rel1[i=3]")
            rel1_3 = g.poly;
        else if (g.label == "rel8[i=3]")
            rel8_3 = g.poly;
        else
            without.push_back(g.poly);
    }
    REQUIRE(!rel1_3.is_zero());
    REQUIRE(!rel8_3.is_zero());
    GroebnerBasis gb = groebner_compute(without);
    CHECK(normal_form(rel1_3, gb).is_zero());
    CHECK(normal_form(rel8_3, gb).is_zero());
}

TEST_CASE("quotient dimension invariant under swapping the first two fibers") {
    auto dim = [](const SeifertParams& s) {
        return quotient_dimension(groebner_compute(build_ideal_hardcoded(s).polys()));
    };
    CHECK(dim(params(-1, 2, -1, 3, 1, 5)) == dim(params(-1, 3, -1, 2, 1, 5)));
    CHECK(dim(params(1, 2, -2, 3, 1, 4)) == dim(params(-2, 3, 1, 2, 1, 4)));
}

TEST_CASE("hardcoded and generic ideals agree (spot checks)") {
    for (auto s : {params(-1, 2, -1, 3, 1, 5), params(-1, 2, -1, 2, 1, 2)}) {
        CAPTURE(s.str());
        CHECK(ideals_equal(build_ideal_hardcoded(s).polys(), build_ideal_generic(s).polys()));
    }
}
