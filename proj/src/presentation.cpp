#include "charscheme/presentation.hpp"

#include <sstream>
#include <stdexcept>

#include "charscheme/chebyshev.hpp"

namespace charscheme {

namespace {

constexpr std::array<Var, 4> kXVar = {kU, kX1, kX2, kX3};  // 1-based by fiber index
constexpr std::array<Var, 4> kYVar = {kU, kY1, kY2, kY3};

TracePoly var(Var v) { return TracePoly::variable(v); }

TracePoly x(int i) { return var(kXVar[i]); }
TracePoly y(int i) { return var(kYVar[i]); }

TracePoly T(long n, Var v) { return TracePoly::from_univariate(cheb_T(n), v); }
TracePoly S(long n, Var v) { return TracePoly::from_univariate(cheb_S(n), v); }

TracePoly rel1(int i) {
    TracePoly u = var(kU);
    return u * u + x(i) * x(i) + y(i) * y(i) - u * x(i) * y(i) - TracePoly::constant(4);
}

TracePoly rel2(int i, int j) {
    TracePoly u = var(kU);
    return TracePoly::constant(2) * y(i) - (u * x(i) + x(j) * y(3) - x(3) * y(j));
}

TracePoly rel3() {
    TracePoly u = var(kU);
    return TracePoly::constant(2) * y(3) - (u * (x(3) - x(1) * x(2)) + y(1) * x(2) + y(2) * x(1));
}

TracePoly rel4() {
    TracePoly u = var(kU);
    return TracePoly::constant(2) * x(3) - (u * y(3) + x(1) * x(2) - y(1) * y(2));
}

std::string lbl(const char* base, std::initializer_list<std::pair<const char*, int>> subs) {
    std::ostringstream os;
    os << base;
    if (subs.size() > 0) {
        os << "[";
        bool first = true;
        for (const auto& [k, v] : subs) {
            if (!first) os << ",";
            first = false;
            os << k << "=" << v;
        }
        os << "]";
    }
    return os.str();
}

}  // namespace

std::array<mpq_class, 3> SeifertParams::input_fractions() const {
    std::array<mpq_class, 3> f;
    for (int i = 0; i < 3; ++i) {
        long a = i == 2 ? q[i] : -q[i];
        f[i] = mpq_class(a, p[i]);
        f[i].canonicalize();
    }
    return f;
}

std::string SeifertParams::str() const {
    auto f = input_fractions();
    std::ostringstream os;
    os << "S2(" << f[0] << "," << f[1] << "," << f[2] << ")";
    return os.str();
}

SeifertParams params_normalize(const std::array<Fraction, 3>& fractions) {
    SeifertParams s;
    s.euler = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& f = fractions[i];
        if (f.den < 2) throw std::invalid_argument("fiber order must be at least 2");
        if (f.num == 0) throw std::invalid_argument("fiber coefficient must be nonzero");
        if (zgcd(f.num, f.den) != 1)
            throw std::invalid_argument("fiber fraction must be in lowest terms");
        if (!f.den.fits_slong_p() || !f.num.fits_slong_p())
            throw std::invalid_argument("fiber parameters too large");
        s.p[i] = f.den.get_si();
        long a = f.num.get_si();
        s.q[i] = i == 2 ? a : -a;
        mpq_class frac(f.num, f.den);
        frac.canonicalize();
        s.euler += frac;
    }
    return s;
}

std::vector<TracePoly> IdealPresentation::polys() const {
    std::vector<TracePoly> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.poly);
    return out;
}

IdealPresentation build_ideal_hardcoded(const SeifertParams& s) {
    IdealPresentation pres;
    pres.params = s;
    pres.source = IdealSource::kHardcoded;
    auto add = [&](std::string label, TracePoly poly) {
        if (!poly.is_zero()) pres.generators.push_back({std::move(label), std::move(poly)});
    };
    TracePoly u = var(kU);
    const auto& p = s.p;
    const auto& q = s.q;

    for (int i = 1; i <= 3; ++i) add(lbl("rel1", {{"i", i}}), rel1(i));
    add(lbl("rel2", {{"i", 1}}), rel2(1, 2));
    add(lbl("rel2", {{"i", 2}}), rel2(2, 1));
    add("rel3", rel3());
    add("rel4", rel4());
    for (int i = 1; i <= 3; ++i)
        add(lbl("rel5", {{"i", i}}), T(q[i - 1], kU) - T(p[i - 1], kXVar[i]));
    for (int i = 1; i <= 3; ++i)
        add(lbl("rel6", {{"i", i}}), T(q[i - 1] + 1, kU) - S(p[i - 1], kXVar[i]) * y(i) +
                                         S(p[i - 1] - 1, kXVar[i]) * u);
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
        add(lbl("rel7", {{"i", i}, {"j", j}}),
            S(q[i - 1], kU) * y(j) - S(q[i - 1] - 1, kU) * x(j) - S(p[i - 1], kXVar[i]) * x(3) +
                S(p[i - 1] - 1, kXVar[i]) * x(j));
    for (int i = 1; i <= 3; ++i)
        add(lbl("rel8", {{"i", i}}), S(q[i - 1] + 1, kU) * y(i) - S(q[i - 1], kU) * x(i) -
                                         S(p[i - 1] + 1, kXVar[i]) * y(i) +
                                         S(p[i - 1], kXVar[i]) * u);
    for (int i = 1; i <= 3; ++i)
        add(lbl("rel9", {{"i", i}}),
            S(q[i - 1], kU) * y(i) - S(q[i - 1] - 1, kU) * x(i) - T(p[i - 1] + 1, kXVar[i]));
    for (auto [i, j, k] : {std::tuple{1, 2, 3}, std::tuple{2, 1, 3}, std::tuple{3, 2, 1},
                           std::tuple{3, 1, 2}})
        add(lbl("rel10", {{"i", i}, {"j", j}, {"k", k}}),
            S(q[i - 1], kU) * y(k) - S(q[i - 1] - 1, kU) * x(k) -
                S(p[i - 1] + 1, kXVar[i]) * x(k) + S(p[i - 1], kXVar[i]) * x(j));
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
        add(lbl("rel11", {{"i", i}, {"j", j}}),
            S(q[i - 1] + 1, kU) * y(j) - S(q[i - 1], kU) * x(j) - S(p[i - 1], kXVar[i]) * y(3) +
                S(p[i - 1] - 1, kXVar[i]) * y(j));
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
        add(lbl("rel12", {{"i", i}, {"j", j}}),
            S(q[2] + 1, kU) * y(i) - S(q[2], kU) * x(i) -
                S(p[2], kX3) * (x(i) * y(3) - y(j)) + S(p[2] - 1, kX3) * y(i));
    return pres;
}

IdealPresentation build_ideal_generic(const SeifertParams& s) {
    IdealPresentation pres;
    pres.params = s;
    pres.source = IdealSource::kGeneric;
    TraceReducer red;

    GroupWord one;
    GroupWord h = GroupWord::generator(Gen::kH);
    GroupWord c1 = GroupWord::generator(Gen::kC1);
    GroupWord c2 = GroupWord::generator(Gen::kC2);
    GroupWord c3 = c1 * c2;
    auto power = [](const GroupWord& w, long n) {
        GroupWord acc;
        for (long i = 0; i < std::labs(n); ++i) acc = acc * w;
        return n < 0 ? acc.inverse() : acc;
    };

    struct Relation {
        std::string name;
        GroupWord lhs, rhs;
    };
    std::vector<Relation> relations = {
        {"hc1=c1h", h * c1, c1 * h},
        {"hc2=c2h", h * c2, c2 * h},
        {"c1^p1=h^q1", power(c1, s.p[0]), power(h, s.q[0])},
        {"c2^p2=h^q2", power(c2, s.p[1]), power(h, s.q[1])},
        {"c3^p3=h^q3", power(c3, s.p[2]), power(h, s.q[2])},
    };
    const std::array<std::pair<const char*, GroupWord>, 7> probes = {
        std::pair{"1", one},      std::pair{"h", h},         std::pair{"c1", c1},
        std::pair{"c2", c2},      std::pair{"hc1", h * c1},  std::pair{"hc2", h * c2},
        std::pair{"c1c2", c3},
    };

    for (const auto& rel : relations) {
        for (const auto& [probe_name, probe] : probes) {
            TracePoly g = red.reduce(rel.lhs * probe) - red.reduce(rel.rhs * probe);
            if (g.is_zero()) continue;
            pres.generators.push_back({"HP[" + rel.name + ",x=" + probe_name + "]", g});
        }
    }
    pres.generators.push_back({"F", charring_relation()});
    return pres;
}

bool verify_redundancy_identity() {
    TracePoly combo = rel1(1) + rel1(2) - rel1(3) + x(3) * rel4() + y(3) * rel3();
    return combo == charring_relation();
}

}  // namespace charscheme
