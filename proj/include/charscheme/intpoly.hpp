#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace charscheme {

/// Univariate polynomial with exact integer coefficients.
/// coeff(i) is the coefficient of X^i; the zero polynomial stores nothing.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(const mpz_class& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& rhs) const = default;

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;
    std::string str(const std::string& var = "X") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

}  // namespace charscheme
