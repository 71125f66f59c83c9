#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charscheme/characters.hpp"
#include "charscheme/groebner.hpp"

namespace charscheme {

struct TangentReport {
    CharacterPoint point;
    unsigned analysis_conductor = 1;  // field used for the exact linear algebra
    std::size_t jacobian_rank = 0;
    int tangent_dim = 0;
    /// Kernel basis vectors of length 7. At an exceptional point there is one
    /// vector, scaled so dx1 = zeta_1 - zeta_1^{-1}.
    std::vector<std::vector<CycloNumber>> tangent_basis;
    std::optional<bool> obstruction_solvable;  // set when the order-2 test ran
    std::optional<int> multiplicity;           // unset while undetermined
    bool anomaly = false;
};

/// Exact Jacobian of the generators at the point, rank and kernel over the
/// point's own cyclotomic field. Throws std::invalid_argument when the point
/// does not satisfy every generator.
TangentReport tangent_space(const IdealPresentation& ideal, const CharacterPoint& pt);

struct ObstructionResult {
    bool solvable;  // true = an order-2 jet extends v
    /// Second derivative of the u/x1 power relation along v, when that
    /// generator is present: the direct non-vanishing witness.
    std::optional<CycloNumber> power_relation_second_derivative;
};

/// Solvability of J w = -Q with Q_f = (1/2) v^T H_f v over all generators f.
/// Requires J v = 0 exactly (checked).
ObstructionResult order2_obstruction(const IdealPresentation& ideal, const CharacterPoint& pt,
                                     const std::vector<CycloNumber>& v);

/// Fills multiplicity from the tangent data: dim 0 -> 1; dim 1 with an
/// unsolvable order-2 system -> 2; anything else is flagged as an anomaly,
/// never guessed.
TangentReport& multiplicity_verdict(TangentReport& tr);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
    bool operator==(const CheckResult&) const = default;
};

struct SchemeReport {
    SeifertParams params;
    Census cens;
    std::vector<TangentReport> tangent;  // parallel to cens.points
    mpz_class sum_multiplicities;
    mpz_class dimension_formula_rhs;
    std::optional<std::size_t> groebner_dimension;
    std::size_t groebner_basis_size = 0;
    int groebner_max_degree = 0;
    bool reduced = false;  // computed: every multiplicity equals 1
    bool anomaly = false;
    std::vector<CheckResult> checks;

    bool all_checks_pass() const;
};

struct ReportOptions {
    bool run_groebner = true;
    bool check_generic_ideal = false;  // cross-derivation ideal equality
    BuchbergerBudget budget;
};

/// Full pipeline: census, per-point tangent/obstruction/multiplicity, the
/// dimension formula, the Groebner quotient dimension (budget permitting),
/// and all cross-checks as named pass/fail results.
SchemeReport scheme_report(const SeifertParams& s, const ReportOptions& opt = {});

}  // namespace charscheme
