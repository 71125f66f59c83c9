#include "charscheme/chebyshev.hpp"

#include <cstdlib>
#include <stdexcept>

namespace charscheme {

namespace {

/// Runs the recurrence P_{k+1} = X P_k - P_{k-1} up from the two seeds.
IntPoly recurrence(long n, IntPoly p0, IntPoly p1) {
    if (n == 0) return p0;
    IntPoly x = IntPoly::monomial(1, 1);
    for (long k = 1; k < n; ++k) {
        IntPoly next = x * p1 - p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

}  // namespace

IntPoly cheb_T(long n) {
    // T_{-n} = T_n
    long m = std::labs(n);
    return recurrence(m, IntPoly::constant(2), IntPoly::monomial(1, 1));
}

IntPoly cheb_S(long n) {
    // S_{-n} = -S_n
    long m = std::labs(n);
    IntPoly s = recurrence(m, IntPoly{}, IntPoly::constant(1));
    return n < 0 ? -s : s;
}

IntPoly cheb_derivative(const IntPoly& p) { return p.derivative(); }

CycloNumber eval_at(const IntPoly& p, const CycloNumber& x) {
    CycloNumber acc = CycloNumber::zero(x.conductor());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x + CycloNumber::from_rational(mpq_class(p.coeff(i)), x.conductor());
    }
    return acc;
}

ChebSpecialValues cheb_special_values(long n, int eps, const CycloNumber& zeta) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    const unsigned N = zeta.conductor();
    const CycloNumber one = CycloNumber::one(N);
    const CycloNumber minus_one = -one;
    if (zeta == one || zeta == minus_one)
        throw std::domain_error("zeta must differ from +1 and -1");
    const CycloNumber eps_c = eps == 1 ? one : minus_one;
    if (zeta.pow(n) != eps_c) throw std::invalid_argument("zeta^n != eps");

    const CycloNumber x = zeta + zeta.inverse();
    const CycloNumber x2m4 = x * x - CycloNumber::from_integer(4, N);
    const CycloNumber n_c = CycloNumber::from_integer(n, N);

    ChebSpecialValues v{
        .s_n_x = CycloNumber::zero(N),
        .s_nplus1_x = eps_c,
        .s_nminus1_x = -eps_c,
        .s_n_2eps = (eps > 0 || n % 2 == 1) ? n_c : -n_c,  // n * eps^{n-1}
        .ds_n_x = CycloNumber::from_integer(2 * n, N) * eps_c / x2m4,
        .ds_nplus1_x = n_c * x * eps_c / x2m4,
        .ds_nminus1_x = n_c * x * eps_c / x2m4,
    };
    return v;
}

}  // namespace charscheme
