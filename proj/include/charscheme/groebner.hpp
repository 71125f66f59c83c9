#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "charscheme/trace_poly.hpp"

namespace charscheme {

struct BuchbergerBudget {
    std::size_t max_pairs = 200000;
};

/// Resource cap hit; distinct from any mathematical failure (there is none:
/// Buchberger terminates whenever it is allowed to run to completion).
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t pairs)
        : std::runtime_error("Groebner pair budget exceeded"), pairs_processed(pairs) {}
    std::size_t pairs_processed;
};

struct GroebnerBasis {
    std::vector<TracePoly> basis;  // reduced: monic, auto-reduced, sorted by leading monomial
    MonomialOrder order = MonomialOrder::kDegRevLex;

    std::size_t size() const { return basis.size(); }
    int max_degree() const;
};

GroebnerBasis groebner_compute(const std::vector<TracePoly>& gens,
                               MonomialOrder order = MonomialOrder::kDegRevLex,
                               const BuchbergerBudget& budget = {});

/// Unique remainder of p modulo the reduced basis; zero iff p is in the ideal.
TracePoly normal_form(const TracePoly& p, const GroebnerBasis& gb);

/// Number of standard monomials of the quotient ring, or nullopt when the
/// quotient is infinite-dimensional (some variable has no pure power among
/// the leading monomials).
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb);

/// Mutual normal-form-zero check of two generating sets.
bool ideals_equal(const std::vector<TracePoly>& a, const std::vector<TracePoly>& b,
                  const BuchbergerBudget& budget = {});

}  // namespace charscheme
