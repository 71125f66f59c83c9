#pragma once

#include "charscheme/cyclotomic.hpp"
#include "charscheme/intpoly.hpp"

namespace charscheme {

/// T_n: T_0 = 2, T_1 = X, T_{n+1} = X T_n - T_{n-1}, extended to n < 0 by
/// T_{-n} = T_n. Satisfies T_n(x + x^{-1}) = x^n + x^{-n}.
IntPoly cheb_T(long n);

/// S_n: S_0 = 0, S_1 = 1, same recurrence, extended by S_{-n} = -S_n.
/// Satisfies (x - x^{-1}) S_n(x + x^{-1}) = x^n - x^{-n}.
IntPoly cheb_S(long n);

/// Formal derivative; cheb_derivative(cheb_T(n)) == n * cheb_S(n).
IntPoly cheb_derivative(const IntPoly& p);

/// Closed-form values of S_n and its derivative at x = zeta + zeta^{-1} for
/// zeta != +-1 with zeta^n = eps, and at 2*eps. Each field equals the direct
/// polynomial evaluation at x in Q(zeta_N).
struct ChebSpecialValues {
    CycloNumber s_n_x;         // S_n(x) = 0
    CycloNumber s_nplus1_x;    // S_{n+1}(x) = eps
    CycloNumber s_nminus1_x;   // S_{n-1}(x) = -eps
    CycloNumber s_n_2eps;      // S_n(2 eps) = n eps^{n-1}
    CycloNumber ds_n_x;        // S_n'(x) = 2 n eps / (x^2 - 4)
    CycloNumber ds_nplus1_x;   // S_{n+1}'(x) = n x eps / (x^2 - 4)
    CycloNumber ds_nminus1_x;  // S_{n-1}'(x) = n x eps / (x^2 - 4)
};

/// Requires n >= 1, eps in {+1, -1}, zeta != +-1 and zeta^n = eps.
/// Throws std::domain_error when zeta is +-1 (x^2 - 4 vanishes) and
/// std::invalid_argument when zeta^n != eps.
ChebSpecialValues cheb_special_values(long n, int eps, const CycloNumber& zeta);

/// Evaluate an integer polynomial at a field element.
CycloNumber eval_at(const IntPoly& p, const CycloNumber& x);

}  // namespace charscheme
