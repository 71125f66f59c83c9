#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "charscheme/presentation.hpp"

namespace charscheme {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// U A V = D with U, V unimodular and D diagonal with d1 | d2 | ... >= 0.
struct SmithResult {
    IntMatrix d, u, v;
};

SmithResult smith_normal_form(const IntMatrix& a);

/// First homology of S^2(q1/p1, q2/p2, q3/p3) from the abelianized relation
/// matrix on the generators (h, c1, c2). Finite iff the Euler number is
/// nonzero; |H1| = |det| = |p1 p2 p3 e(M)|.
struct HomologyData {
    bool finite = false;
    std::array<mpz_class, 3> invariant_factors{};  // d1 | d2 | d3
    mpz_class order_h1;                            // product, when finite
    mpz_class order_h1_z2;                         // 2^(number of even factors)
    /// coordinates of [h], [c1], [c2] in the invariant-factor decomposition
    std::array<std::array<mpz_class, 3>, 3> classes{};
};

HomologyData homology(const SeifertParams& s);

}  // namespace charscheme
