#pragma once

#include <array>
#include <string>
#include <vector>

#include "charscheme/trace_calc.hpp"
#include "charscheme/trace_poly.hpp"

namespace charscheme {

/// An exact fraction as written by the user, kept un-canonicalized so that
/// non-coprime input can be rejected instead of silently reduced.
struct Fraction {
    mpz_class num;
    mpz_class den;
};

/// Normalized parameters of S^2(a1/b1, a2/b2, a3/b3). Internally p_i = b_i
/// and (q1, q2, q3) = (-a1, -a2, a3), the sign split under which the ideal
/// generators are sign-free; euler = a1/b1 + a2/b2 + a3/b3 is preserved.
struct SeifertParams {
    std::array<long, 3> p;
    std::array<long, 3> q;
    mpq_class euler;

    std::array<mpq_class, 3> input_fractions() const;
    std::string str() const;
    bool operator==(const SeifertParams&) const = default;
};

/// Validates b_i >= 2, a_i != 0, gcd(a_i, b_i) = 1; throws
/// std::invalid_argument otherwise. A zero Euler number is accepted here and
/// rejected by the operations that require it.
SeifertParams params_normalize(const std::array<Fraction, 3>& fractions);

struct LabeledPoly {
    std::string label;
    TracePoly poly;
};

enum class IdealSource { kHardcoded, kGeneric };

struct IdealPresentation {
    SeifertParams params;
    IdealSource source = IdealSource::kHardcoded;
    std::vector<LabeledPoly> generators;

    std::vector<TracePoly> polys() const;
};

/// The parameterized generator list: rel1..rel4 from the central-generator
/// relations and rel5..rel12 from the power relations, Chebyshev indices of
/// negative q handled through T_{-n} = T_n, S_{-n} = -S_n.
IdealPresentation build_ideal_hardcoded(const SeifertParams& s);

/// The same ideal derived generically: for every defining relation w = w' of
/// the fundamental group and every x in {1, h, c1, c2, hc1, hc2, c1c2},
/// emit trace(w x) - trace(w' x); zero polynomials are dropped and the
/// free-group relation F is appended.
IdealPresentation build_ideal_generic(const SeifertParams& s);

/// Checks exactly that F = d1 + d2 - d3 + x3*rel4 + y3*rel3, where d_i are
/// the rel1 polynomials; this places F in the ideal generated by rel1..rel4.
bool verify_redundancy_identity();

}  // namespace charscheme
