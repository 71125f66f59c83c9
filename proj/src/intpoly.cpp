#include "charscheme/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace charscheme {

namespace {
const mpz_class kZero = 0;
}

IntPoly IntPoly::constant(const mpz_class& c) {
    if (c == 0) return IntPoly{};
    return IntPoly{{c}};
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
    if (c == 0) return IntPoly{};
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPoly{std::move(v)};
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) return kZero;
    return coeffs_[i];
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
    return IntPoly{std::move(out)};
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
    return IntPoly{std::move(out)};
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly{};
    std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPoly{std::move(out)};
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return IntPoly{std::move(out)};
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly{};
    std::vector<mpz_class> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = mpz_class(i) * coeffs_[i];
    return IntPoly{std::move(out)};
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace charscheme
