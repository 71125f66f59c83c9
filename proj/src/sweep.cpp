#include "charscheme/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace charscheme {

std::vector<SeifertParams> enumerate_manifolds(long p_max, long q_max) {
    if (p_max < 2 || q_max < 1) throw std::invalid_argument("empty sweep range");
    std::vector<mpq_class> fractions;
    for (long b = 2; b <= p_max; ++b)
        for (long a = -q_max; a <= q_max; ++a) {
            if (a == 0 || std::gcd(std::labs(a), b) != 1) continue;
            mpq_class f(a, b);
            f.canonicalize();
            fractions.push_back(f);
        }
    std::sort(fractions.begin(), fractions.end());

    std::vector<SeifertParams> out;
    const std::size_t n = fractions.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                mpq_class e = fractions[i] + fractions[j] + fractions[k];
                if (e == 0) continue;
                auto frac = [&](const mpq_class& f) {
                    return Fraction{f.get_num(), f.get_den()};
                };
                out.push_back(
                    params_normalize({frac(fractions[i]), frac(fractions[j]), frac(fractions[k])}));
            }
    return out;
}

SweepRow sweep_one(const SeifertParams& s, const SweepOptions& opt) {
    SweepRow row;
    row.params = s;
    try {
        if (opt.run_tangent) {
            ReportOptions ropt;
            ropt.run_groebner = opt.run_groebner;
            ropt.check_generic_ideal = opt.check_generic_ideal;
            ropt.budget = opt.budget;
            SchemeReport rep = scheme_report(s, ropt);
            row.h1_order = rep.cens.homology.order_h1;
            row.h1_z2 = rep.cens.homology.order_h1_z2;
            row.num_points = rep.cens.points.size();
            row.x_m = rep.cens.x_m;
            row.dim_formula = rep.dimension_formula_rhs;
            row.groebner_dim = rep.groebner_dimension;
            row.reduced = rep.reduced;
            row.anomaly = rep.anomaly;
            row.checks = rep.checks;
            row.ok = rep.all_checks_pass();
        } else {
            Census c = census(s);
            row.h1_order = c.homology.order_h1;
            row.h1_z2 = c.homology.order_h1_z2;
            row.num_points = c.points.size();
            row.x_m = c.x_m;
            row.dim_formula = theorem_dimension_rhs(s, c.homology);
            mpq_class pe = mpq_class(s.p[0]) * s.p[1] * s.p[2] * s.euler;
            bool det_ok = c.homology.order_h1 == abs(pe.get_num());
            row.checks.push_back({"homology_order_det", det_ok, ""});
            if (opt.check_generic_ideal) {
                bool eq = ideals_equal(build_ideal_hardcoded(s).polys(),
                                       build_ideal_generic(s).polys(), opt.budget);
                row.checks.push_back({"ideal_cross_derivation", eq, ""});
            }
            if (opt.run_groebner) {
                GroebnerBasis gb = groebner_compute(build_ideal_hardcoded(s).polys(),
                                                    MonomialOrder::kDegRevLex, opt.budget);
                row.groebner_dim = quotient_dimension(gb);
                bool dim_ok = row.groebner_dim.has_value() &&
                              mpz_class(static_cast<long>(*row.groebner_dim)) == row.dim_formula;
                row.checks.push_back({"groebner_dimension", dim_ok, ""});
            }
            row.ok = true;
            for (const auto& ch : row.checks) row.ok = row.ok && ch.pass;
        }
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

std::vector<SweepRow> run_sweep_serial(const SweepOptions& opt) {
    std::vector<SeifertParams> manifolds = enumerate_manifolds(opt.p_max, opt.q_max);
    std::vector<SweepRow> rows;
    rows.reserve(manifolds.size());
    for (const auto& s : manifolds) rows.push_back(sweep_one(s, opt));
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepOptions& opt) {
#ifdef _OPENMP
    if (opt.parallel) {
        std::vector<SeifertParams> manifolds = enumerate_manifolds(opt.p_max, opt.q_max);
        std::vector<SweepRow> rows(manifolds.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(manifolds.size()); ++i)
            rows[i] = sweep_one(manifolds[i], opt);
        return rows;
    }
#endif
    return run_sweep_serial(opt);
}

}  // namespace charscheme
