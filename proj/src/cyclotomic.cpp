#include "charscheme/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace charscheme {

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class zlcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

namespace {

/// Exact division of integer polynomials; throws if not exact.
IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<mpz_class> rem(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) {
        if (num.is_zero()) return IntPoly{};
        throw std::logic_error("polynomial division not exact");
    }
    std::vector<mpz_class> quot(dn - dd + 1);
    const mpz_class& lead = den.coeff(dd);
    for (int i = dn; i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpz_class q = rem[i] / lead;
        if (q * lead != rem[i]) throw std::logic_error("polynomial division not exact");
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("polynomial division not exact");
    return IntPoly{std::move(quot)};
}

std::map<unsigned, IntPoly> g_phi_cache;
std::mutex g_phi_mutex;

IntPoly compute_phi(unsigned n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<mpz_class> xn(n + 1);
    xn[0] = -1;
    xn[n] = 1;
    IntPoly result{std::move(xn)};
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        result = exact_div(result, cyclotomic_polynomial(d));
    }
    return result;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(n);
        if (it != g_phi_cache.end()) return it->second;
    }
    IntPoly phi = n == 1 ? IntPoly{{-1, 1}} : compute_phi(n);
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return g_phi_cache.emplace(n, std::move(phi)).first->second;
}

unsigned euler_phi(unsigned n) { return static_cast<unsigned>(cyclotomic_polynomial(n).degree()); }

CycloNumber::CycloNumber(unsigned n, std::vector<mpz_class> num, mpz_class den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
    reduce_mod_phi();
    normalize();
}

CycloNumber CycloNumber::zero(unsigned n) { return CycloNumber(n, {}, 1); }

CycloNumber CycloNumber::one(unsigned n) { return CycloNumber(n, {mpz_class(1)}, 1); }

CycloNumber CycloNumber::from_rational(const mpq_class& q, unsigned n) {
    return CycloNumber(n, {q.get_num()}, q.get_den());
}

CycloNumber CycloNumber::root_of_unity(unsigned n, long k) {
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    std::vector<mpz_class> v(r + 1);
    v[r] = 1;
    return CycloNumber(n, std::move(v), 1);
}

mpq_class CycloNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("CycloNumber is not rational");
    if (num_.empty()) return mpq_class(0);
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

void CycloNumber::reduce_mod_phi() {
    const IntPoly& phi = cyclotomic_polynomial(n_);
    const int d = phi.degree();
    int deg = static_cast<int>(num_.size()) - 1;
    for (int i = deg; i >= d; --i) {
        if (num_[i] == 0) continue;
        mpz_class c = num_[i];
        num_[i] = 0;
        // x^i = x^{i-d} * (x^d - phi) mod phi, phi monic
        for (int j = 0; j < d; ++j) num_[i - d + j] -= c * phi.coeff(j);
    }
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
}

void CycloNumber::normalize() {
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
        g = zgcd(g, c);
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (auto& c : num_) c /= g;
    }
}

void CycloNumber::check_same_field(const CycloNumber& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("cyclotomic conductor mismatch");
}

CycloNumber CycloNumber::operator+(const CycloNumber& rhs) const {
    check_same_field(rhs);
    mpz_class den = zlcm(den_, rhs.den_);
    mpz_class sa = den / den_, sb = den / rhs.den_;
    std::vector<mpz_class> v(std::max(num_.size(), rhs.num_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < num_.size()) v[i] = num_[i] * sa;
        if (i < rhs.num_.size()) v[i] += rhs.num_[i] * sb;
    }
    return CycloNumber(n_, std::move(v), std::move(den));
}

CycloNumber CycloNumber::operator-(const CycloNumber& rhs) const { return *this + (-rhs); }

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycloNumber CycloNumber::operator*(const CycloNumber& rhs) const {
    check_same_field(rhs);
    if (is_zero() || rhs.is_zero()) return zero(n_);
    std::vector<mpz_class> v(num_.size() + rhs.num_.size() - 1);
    for (std::size_t i = 0; i < num_.size(); ++i)
        for (std::size_t j = 0; j < rhs.num_.size(); ++j) v[i + j] += num_[i] * rhs.num_[j];
    return CycloNumber(n_, std::move(v), den_ * rhs.den_);
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Extended Euclid over Q[x]: s * this + t * Phi = gcd (a nonzero constant,
    // since Phi_N is irreducible over Q).
    const IntPoly& phi = cyclotomic_polynomial(n_);
    using QPoly = std::vector<mpq_class>;
    auto trim = [](QPoly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    QPoly r0, r1, s0{mpq_class(1)}, s1{};
    r0.reserve(num_.size());
    for (const auto& c : num_) r0.emplace_back(mpq_class(c, den_));
    for (auto& q : r0) q.canonicalize();
    r1.reserve(phi.degree() + 1);
    for (int i = 0; i <= phi.degree(); ++i) r1.emplace_back(phi.coeff(i));
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        // (quotient, remainder) of r0 / r1
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
        QPoly rem = r0;
        for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(r1.size()) - 1; --i) {
            if (rem[i] == 0) continue;
            mpq_class f = rem[i] / r1.back();
            q[i - (r1.size() - 1)] = f;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[i - (r1.size() - 1) + j] -= f * r1[j];
        }
        trim(rem);
        // s_next = s0 - q * s1
        QPoly qs(q.empty() || s1.empty() ? QPoly{} : QPoly(q.size() + s1.size() - 1));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        QPoly snext(std::max(s0.size(), qs.size()));
        for (std::size_t i = 0; i < snext.size(); ++i) {
            if (i < s0.size()) snext[i] = s0[i];
            if (i < qs.size()) snext[i] -= qs[i];
        }
        trim(snext);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    if (r0.size() != 1) throw std::logic_error("gcd with cyclotomic polynomial not constant");
    // inverse = s0 / r0[0]
    mpz_class den = 1;
    for (auto& c : s0) {
        c /= r0[0];
        c.canonicalize();
        den = zlcm(den, c.get_den());
    }
    std::vector<mpz_class> v(s0.size());
    for (std::size_t i = 0; i < s0.size(); ++i) v[i] = s0[i].get_num() * (den / s0[i].get_den());
    return CycloNumber(n_, std::move(v), std::move(den));
}

CycloNumber CycloNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNumber acc = one(n_);
    CycloNumber base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool CycloNumber::operator==(const CycloNumber& rhs) const {
    check_same_field(rhs);
    return den_ == rhs.den_ && num_ == rhs.num_;
}

std::string CycloNumber::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    bool parens = false;
    std::ostringstream body;
    int nterms = 0;
    for (int i = static_cast<int>(num_.size()) - 1; i >= 0; --i) {
        const mpz_class& c = num_[i];
        if (c == 0) continue;
        ++nterms;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) body << "-";
            first = false;
        } else {
            body << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) body << a.get_str();
        if (i > 0) {
            if (a != 1) body << "*";
            body << "z";
            if (i > 1) body << "^" << i;
        }
    }
    parens = den_ != 1 && nterms > 1;
    if (parens) os << "(";
    os << body.str();
    if (parens) os << ")";
    if (den_ != 1) os << "/" << den_.get_str();
    return os.str();
}

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols, unsigned n)
    : rows_(rows), cols_(cols), n_(n), a_(rows * cols, CycloNumber::zero(n)) {}

CycloMatrix CycloMatrix::transpose() const {
    CycloMatrix t(cols_, rows_, n_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

struct Rref {
    CycloMatrix m;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

/// Gauss-Jordan over Q(zeta_N). Columns with index >= limit_cols are carried
/// along (augmented part) but never chosen as pivots. Pivot columns are chosen
/// sparsest-first to limit fill-in.
Rref rref(CycloMatrix m, std::size_t limit_cols) {
    const std::size_t rows = m.rows();
    std::vector<bool> col_used(limit_cols, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t next_row = 0;
    while (next_row < rows) {
        std::size_t best_col = limit_cols, best_count = 0;
        for (std::size_t c = 0; c < limit_cols; ++c) {
            if (col_used[c]) continue;
            std::size_t count = 0;
            for (std::size_t r = next_row; r < rows; ++r)
                if (!m.at(r, c).is_zero()) ++count;
            if (count > 0 && (best_col == limit_cols || count < best_count)) {
                best_col = c;
                best_count = count;
            }
        }
        if (best_col == limit_cols) break;
        std::size_t piv = next_row;
        while (m.at(piv, best_col).is_zero()) ++piv;
        if (piv != next_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(next_row, c));
        CycloNumber inv = m.at(next_row, best_col).inverse();
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(next_row, c).is_zero()) m.at(next_row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row || m.at(r, best_col).is_zero()) continue;
            CycloNumber f = m.at(r, best_col);
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (m.at(next_row, c).is_zero()) continue;
                m.at(r, c) -= f * m.at(next_row, c);
            }
        }
        col_used[best_col] = true;
        pivots.emplace_back(next_row, best_col);
        ++next_row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t cyclo_rank(const CycloMatrix& m) { return rref(m, m.cols()).pivots.size(); }

std::vector<std::vector<CycloNumber>> cyclo_kernel(const CycloMatrix& m) {
    Rref r = rref(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto& [row, col] : r.pivots) is_pivot[col] = true;
    std::vector<std::vector<CycloNumber>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycloNumber> v(m.cols(), CycloNumber::zero(m.conductor()));
        v[f] = CycloNumber::one(m.conductor());
        for (auto& [row, col] : r.pivots) v[col] = -r.m.at(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<CycloNumber>> cyclo_solve(const CycloMatrix& m,
                                                    const std::vector<CycloNumber>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("cyclo_solve dimension mismatch");
    CycloMatrix aug(m.rows(), m.cols() + 1, m.conductor());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    Rref rr = rref(std::move(aug), m.cols());
    std::vector<bool> row_has_pivot(m.rows(), false);
    for (auto& [row, col] : rr.pivots) row_has_pivot[row] = true;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!row_has_pivot[r] && !rr.m.at(r, m.cols()).is_zero()) return std::nullopt;
    std::vector<CycloNumber> x(m.cols(), CycloNumber::zero(m.conductor()));
    for (auto& [row, col] : rr.pivots) x[col] = rr.m.at(row, m.cols());
    return x;
}

}  // namespace charscheme
