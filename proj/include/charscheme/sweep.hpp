#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charscheme/analysis.hpp"

namespace charscheme {

struct SweepOptions {
    long p_max = 5;
    long q_max = 3;
    bool run_tangent = true;         // per-point analysis (multiplicities, reducedness)
    bool run_groebner = false;       // quotient-dimension cross-check per manifold
    bool check_generic_ideal = false;
    bool parallel = true;            // OpenMP over manifolds; results stay ordered
    BuchbergerBudget budget;
};

struct SweepRow {
    SeifertParams params;
    bool ok = false;
    std::string error;  // nonempty when the pipeline threw
    mpz_class h1_order;
    mpz_class h1_z2;
    std::size_t num_points = 0;
    std::size_t x_m = 0;
    mpz_class dim_formula;
    std::optional<std::size_t> groebner_dim;
    std::optional<bool> reduced;  // set when tangent analysis ran
    bool anomaly = false;
    std::vector<CheckResult> checks;

    bool operator==(const SweepRow&) const = default;
};

/// All manifolds S^2(a1/b1, a2/b2, a3/b3) with 2 <= b_i <= p_max,
/// 1 <= |a_i| <= q_max, gcd(a_i, b_i) = 1 and nonzero Euler number, one
/// representative per unordered fraction multiset, sorted deterministically.
std::vector<SeifertParams> enumerate_manifolds(long p_max, long q_max);

/// Reference implementation: one manifold at a time, in order.
std::vector<SweepRow> run_sweep_serial(const SweepOptions& opt);

/// OpenMP over manifolds when opt.parallel and OpenMP is available; output
/// is index-ordered and identical to the serial run.
std::vector<SweepRow> run_sweep(const SweepOptions& opt);

/// One manifold through the pipeline selected by the options.
SweepRow sweep_one(const SeifertParams& s, const SweepOptions& opt);

}  // namespace charscheme
