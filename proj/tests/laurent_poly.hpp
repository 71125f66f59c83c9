#pragma once

// Test-only exact Laurent polynomials over Q, used as an independent oracle
// for the Chebyshev identities T_n(x + x^{-1}) = x^n + x^{-n} and
// (x - x^{-1}) S_n(x + x^{-1}) = x^n - x^{-n}.

#include <gmpxx.h>

#include <map>

#include "charscheme/intpoly.hpp"

namespace charscheme::testing {

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(const mpq_class& c, long e) {
        LaurentPoly p;
        if (c != 0) p.t_[e] = c;
        return p;
    }
    static LaurentPoly x(long e) { return monomial(1, e); }

    LaurentPoly operator+(const LaurentPoly& rhs) const {
        LaurentPoly out = *this;
        for (const auto& [e, c] : rhs.t_) {
            auto& v = out.t_[e];
            v += c;
            if (v == 0) out.t_.erase(e);
        }
        return out;
    }
    LaurentPoly operator-() const {
        LaurentPoly out = *this;
        for (auto& [e, c] : out.t_) c = -c;
        return out;
    }
    LaurentPoly operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }
    LaurentPoly operator*(const LaurentPoly& rhs) const {
        LaurentPoly out;
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : rhs.t_) {
                auto& v = out.t_[e1 + e2];
                v += c1 * c2;
                if (v == 0) out.t_.erase(e1 + e2);
            }
        return out;
    }
    bool operator==(const LaurentPoly& rhs) const = default;

    /// p(x + x^{-1}) as a Laurent polynomial.
    static LaurentPoly substitute_x_plus_xinv(const IntPoly& p) {
        LaurentPoly s = x(1) + x(-1);
        LaurentPoly acc;
        for (int i = p.degree(); i >= 0; --i) {
            acc = acc * s + monomial(mpq_class(p.coeff(i)), 0);
        }
        return acc;
    }

private:
    std::map<long, mpq_class> t_;
};

}  // namespace charscheme::testing
