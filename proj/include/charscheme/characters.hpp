#pragma once

#include <array>
#include <variant>
#include <vector>

#include "charscheme/cyclotomic.hpp"
#include "charscheme/homology.hpp"
#include "charscheme/presentation.hpp"

namespace charscheme {

enum class PointKind { kAbelian, kIrreducible };

/// Abelian characters carry the homomorphism values (m, a1, a2) = images of
/// (h, c1, c2), as exponents of zeta_N.
struct AbelianWitness {
    long m_exp, a1_exp, a2_exp;
};

/// Irreducible characters carry eps = trace(h)/2 and the eigenvalue roots
/// zeta_i of the three fiber generators, as exponents of zeta_N.
struct IrreducibleWitness {
    int eps;
    std::array<long, 3> zeta_exp;
};

/// A closed point of the character variety. Every coordinate is of the form
/// zeta_N^e + zeta_N^{-e}; points store the exponents and materialize exact
/// field elements on demand.
struct CharacterPoint {
    unsigned conductor = 1;
    std::array<long, kNumVars> exps{};
    PointKind kind = PointKind::kAbelian;
    bool exceptional = false;
    std::variant<AbelianWitness, IrreducibleWitness> witness;

    std::array<CycloNumber, kNumVars> coords() const { return coords_at(conductor); }
    /// Coordinates in Q(zeta_m); m must be divisible by every coordinate's
    /// root-of-unity order (minimal_conductor() | m).
    std::array<CycloNumber, kNumVars> coords_at(unsigned m) const;
    /// Smallest even conductor containing all coordinate and witness roots.
    unsigned minimal_conductor() const;
    /// Dedup key: coordinates determine exponents only up to sign.
    std::array<long, kNumVars> canonical_key() const;
};

long p_plus(long p);   // ceil(p/2) - 1
long p_minus(long p);  // floor(p/2)

/// One conductor per manifold: lcm(2, 2p_i), enlarged by |H1| when needed so
/// that every abelian character value lives in the field.
unsigned global_conductor(const SeifertParams& s, const HomologyData& h);

std::vector<CharacterPoint> enumerate_abelian(const SeifertParams& s, const HomologyData& h,
                                              unsigned conductor);
std::vector<CharacterPoint> enumerate_irreducible(const SeifertParams& s, unsigned conductor);

/// The point-count right-hand side p1+ p2+ p3+ + p1- p2- p3- +
/// (|H1| + |H1(Z/2)|)/2 - x_M and the dimension variant without -x_M. The
/// first product uses p3+ (the two-sided verification pins this form; see
/// also quotient_dimension cross-checks).
mpz_class theorem_point_count_rhs(const SeifertParams& s, const HomologyData& h, std::size_t x_m);
mpz_class theorem_dimension_rhs(const SeifertParams& s, const HomologyData& h);

struct Census {
    SeifertParams params;
    HomologyData homology;
    unsigned conductor = 1;
    std::vector<CharacterPoint> points;  // abelian first, then irreducible
    std::size_t num_abelian = 0;
    std::size_t num_irreducible = 0;
    std::size_t x_m = 0;
    mpz_class count_formula_rhs;
};

/// Full enumeration with the duplicate-free and count-formula assertions;
/// throws std::domain_error when e(M) = 0 and std::logic_error on any
/// census/formula mismatch.
Census census(const SeifertParams& s);

}  // namespace charscheme
