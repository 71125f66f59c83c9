#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "charscheme/intpoly.hpp"

namespace charscheme {

/// The n-th cyclotomic polynomial Phi_n, cached across calls.
const IntPoly& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

mpz_class zgcd(const mpz_class& a, const mpz_class& b);
mpz_class zlcm(const mpz_class& a, const mpz_class& b);

/// An element of the cyclotomic field Q(zeta_N), stored as a rational
/// polynomial in zeta_N of degree < deg Phi_N. Internally the coefficients
/// share one positive denominator with content gcd 1, so arithmetic on
/// algebraic integers never leaves Z[zeta_N].
class CycloNumber {
public:
    CycloNumber() : n_(1), den_(1) {}

    static CycloNumber zero(unsigned n);
    static CycloNumber one(unsigned n);
    static CycloNumber from_rational(const mpq_class& q, unsigned n);
    static CycloNumber from_integer(long v, unsigned n) { return from_rational(mpq_class(v), n); }
    /// zeta_N^k, k arbitrary (reduced mod N).
    static CycloNumber root_of_unity(unsigned n, long k);

    unsigned conductor() const { return n_; }
    bool is_zero() const { return num_.empty(); }
    bool is_rational() const { return num_.size() <= 1; }
    mpq_class rational_value() const;

    CycloNumber operator+(const CycloNumber& rhs) const;
    CycloNumber operator-(const CycloNumber& rhs) const;
    CycloNumber operator*(const CycloNumber& rhs) const;
    CycloNumber operator-() const;
    CycloNumber inverse() const;
    CycloNumber operator/(const CycloNumber& rhs) const { return *this * rhs.inverse(); }
    CycloNumber pow(long e) const;

    CycloNumber& operator+=(const CycloNumber& rhs) { return *this = *this + rhs; }
    CycloNumber& operator-=(const CycloNumber& rhs) { return *this = *this - rhs; }
    CycloNumber& operator*=(const CycloNumber& rhs) { return *this = *this * rhs; }

    bool operator==(const CycloNumber& rhs) const;
    bool operator!=(const CycloNumber& rhs) const { return !(*this == rhs); }

    /// Rendered as a polynomial in z, a fixed primitive N-th root of unity.
    std::string str() const;

    const std::vector<mpz_class>& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

private:
    CycloNumber(unsigned n, std::vector<mpz_class> num, mpz_class den);
    void reduce_mod_phi();
    void normalize();
    void check_same_field(const CycloNumber& rhs) const;

    unsigned n_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

/// Dense matrix over one cyclotomic field.
class CycloMatrix {
public:
    CycloMatrix(std::size_t rows, std::size_t cols, unsigned n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned conductor() const { return n_; }

    CycloNumber& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const CycloNumber& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    CycloMatrix transpose() const;

private:
    std::size_t rows_, cols_;
    unsigned n_;
    std::vector<CycloNumber> a_;
};

/// Exact rank via Gaussian elimination with sparsest-column pivoting.
std::size_t cyclo_rank(const CycloMatrix& m);

/// Basis of the right kernel {v : M v = 0}.
std::vector<std::vector<CycloNumber>> cyclo_kernel(const CycloMatrix& m);

/// One exact solution of M w = b, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument on dimension mismatch.
std::optional<std::vector<CycloNumber>> cyclo_solve(const CycloMatrix& m,
                                                    const std::vector<CycloNumber>& b);

}  // namespace charscheme
