#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "charscheme/cyclotomic.hpp"
#include "charscheme/intpoly.hpp"

namespace charscheme {

/// The seven Fricke coordinates of the rank-3 free group, in display order.
enum Var : int { kU = 0, kX1 = 1, kX2 = 2, kX3 = 3, kY1 = 4, kY2 = 5, kY3 = 6 };

inline constexpr int kNumVars = 7;
extern const std::array<const char*, kNumVars> kVarNames;

using Monomial = std::array<std::uint16_t, kNumVars>;

int total_degree(const Monomial& m);

enum class MonomialOrder { kDegRevLex, kLex };

/// Three-way comparison under the given order with u > x1 > x2 > x3 > y1 >
/// y2 > y3; returns -1, 0 or +1 as a < b, a == b, a > b.
int mono_cmp(MonomialOrder order, const Monomial& a, const Monomial& b);

bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    mpq_class coeff;
};

/// Sparse polynomial in the seven Fricke coordinates with exact rational
/// coefficients. Terms are kept sorted in descending degrevlex order with no
/// zero coefficients, so equality is plain memberwise comparison.
class TracePoly {
public:
    TracePoly() = default;

    static TracePoly constant(const mpq_class& c);
    static TracePoly variable(Var v);
    static TracePoly monomial(const mpq_class& c, const Monomial& m);
    /// p(v) for a univariate integer polynomial p.
    static TracePoly from_univariate(const IntPoly& p, Var v);

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    int degree() const;
    int degree_in(Var v) const;
    mpq_class coefficient_of(const Monomial& m) const;

    TracePoly operator+(const TracePoly& rhs) const;
    TracePoly operator-(const TracePoly& rhs) const;
    TracePoly operator*(const TracePoly& rhs) const;
    TracePoly operator-() const;
    TracePoly& operator+=(const TracePoly& rhs) { return *this = *this + rhs; }
    TracePoly& operator-=(const TracePoly& rhs) { return *this = *this - rhs; }
    TracePoly& operator*=(const TracePoly& rhs) { return *this = *this * rhs; }
    TracePoly scaled(const mpq_class& c) const;
    TracePoly mul_term(const mpq_class& c, const Monomial& m) const;
    bool operator==(const TracePoly& rhs) const;

    TracePoly partial(Var v) const;

    /// Exact evaluation; all coordinates must share one conductor.
    CycloNumber eval(const std::array<CycloNumber, kNumVars>& point) const;
    std::complex<double> eval_complex(const std::array<std::complex<double>, kNumVars>& point) const;

    /// Canonical rendering: degrevlex-descending terms with explicit signs.
    std::string str() const;

private:
    explicit TracePoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
    std::vector<Term> terms_;  // sorted descending, degrevlex
};

TracePoly operator*(const mpq_class& c, const TracePoly& p);

}  // namespace charscheme
