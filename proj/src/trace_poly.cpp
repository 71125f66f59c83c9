#include "charscheme/trace_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace charscheme {

const std::array<const char*, kNumVars> kVarNames = {"u", "x1", "x2", "x3", "y1", "y2", "y3"};

int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

int mono_cmp(MonomialOrder order, const Monomial& a, const Monomial& b) {
    if (order == MonomialOrder::kDegRevLex) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db ? -1 : 1;
        // rightmost nonzero entry of a - b negative => a > b
        for (int i = kNumVars - 1; i >= 0; --i) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }
    for (int i = 0; i < kNumVars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m{};
    for (int i = 0; i < kNumVars; ++i) m[i] = a[i] + b[i];
    return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial m{};
    for (int i = 0; i < kNumVars; ++i) {
        if (b[i] > a[i]) throw std::logic_error("monomial division not exact");
        m[i] = a[i] - b[i];
    }
    return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m{};
    for (int i = 0; i < kNumVars; ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

namespace {
struct DescDegRevLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(MonomialOrder::kDegRevLex, a, b) > 0;
    }
};
}  // namespace

TracePoly TracePoly::constant(const mpq_class& c) {
    if (c == 0) return TracePoly{};
    return TracePoly{{Term{Monomial{}, c}}};
}

TracePoly TracePoly::variable(Var v) {
    Monomial m{};
    m[v] = 1;
    return TracePoly{{Term{m, mpq_class(1)}}};
}

TracePoly TracePoly::monomial(const mpq_class& c, const Monomial& m) {
    if (c == 0) return TracePoly{};
    return TracePoly{{Term{m, c}}};
}

TracePoly TracePoly::from_univariate(const IntPoly& p, Var v) {
    std::vector<Term> terms;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i) == 0) continue;
        Monomial m{};
        m[v] = static_cast<std::uint16_t>(i);
        terms.push_back(Term{m, mpq_class(p.coeff(i))});
    }
    return TracePoly{std::move(terms)};
}

int TracePoly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

int TracePoly::degree_in(Var v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono[v]);
    return d;
}

mpq_class TracePoly::coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return mpq_class(0);
}

TracePoly TracePoly::operator+(const TracePoly& rhs) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = mono_cmp(MonomialOrder::kDegRevLex, terms_[i].mono, rhs.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(rhs.terms_[j++]);
        } else {
            mpq_class sum = terms_[i].coeff + rhs.terms_[j].coeff;
            if (sum != 0) out.push_back(Term{terms_[i].mono, std::move(sum)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
    return TracePoly{std::move(out)};
}

TracePoly TracePoly::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = -t.coeff;
    return TracePoly{std::move(out)};
}

TracePoly TracePoly::operator-(const TracePoly& rhs) const { return *this + (-rhs); }

TracePoly TracePoly::operator*(const TracePoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return TracePoly{};
    std::map<Monomial, mpq_class, DescDegRevLex> acc;
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            auto [it, fresh] = acc.try_emplace(m, 0);
            it->second += a.coeff * b.coeff;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back(Term{m, std::move(c)});
    return TracePoly{std::move(out)};
}

TracePoly TracePoly::scaled(const mpq_class& c) const {
    if (c == 0) return TracePoly{};
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff *= c;
    return TracePoly{std::move(out)};
}

TracePoly TracePoly::mul_term(const mpq_class& c, const Monomial& m) const {
    if (c == 0) return TracePoly{};
    std::vector<Term> out = terms_;
    for (auto& t : out) {
        t.mono = mono_mul(t.mono, m);
        t.coeff *= c;
    }
    // multiplying by a fixed monomial preserves degrevlex order
    return TracePoly{std::move(out)};
}

bool TracePoly::operator==(const TracePoly& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff)
            return false;
    return true;
}

TracePoly TracePoly::partial(Var v) const {
    std::map<Monomial, mpq_class, DescDegRevLex> acc;
    for (const auto& t : terms_) {
        if (t.mono[v] == 0) continue;
        Monomial m = t.mono;
        int e = m[v];
        m[v] -= 1;
        acc[m] += mpq_class(e) * t.coeff;
    }
    std::vector<Term> out;
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back(Term{m, std::move(c)});
    return TracePoly{std::move(out)};
}

CycloNumber TracePoly::eval(const std::array<CycloNumber, kNumVars>& point) const {
    const unsigned n = point[0].conductor();
    for (const auto& c : point)
        if (c.conductor() != n) throw std::invalid_argument("point coordinates mix conductors");
    // Power tables avoid recomputing repeated powers across terms.
    std::array<std::vector<CycloNumber>, kNumVars> powers;
    for (int v = 0; v < kNumVars; ++v) {
        int d = degree_in(static_cast<Var>(v));
        powers[v].reserve(d + 1);
        powers[v].push_back(CycloNumber::one(n));
        for (int e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * point[v]);
    }
    CycloNumber acc = CycloNumber::zero(n);
    for (const auto& t : terms_) {
        CycloNumber prod = CycloNumber::from_rational(t.coeff, n);
        for (int v = 0; v < kNumVars; ++v)
            if (t.mono[v] > 0) prod *= powers[v][t.mono[v]];
        acc += prod;
    }
    return acc;
}

std::complex<double> TracePoly::eval_complex(
    const std::array<std::complex<double>, kNumVars>& point) const {
    std::complex<double> acc = 0.0;
    for (const auto& t : terms_) {
        std::complex<double> prod(t.coeff.get_d(), 0.0);
        for (int v = 0; v < kNumVars; ++v)
            for (int e = 0; e < t.mono[v]; ++e) prod *= point[v];
        acc += prod;
    }
    return acc;
}

std::string TracePoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class a = abs(t.coeff);
        if (first) {
            if (t.coeff < 0) os << "-";
            first = false;
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        bool is_const = total_degree(t.mono) == 0;
        bool printed_coeff = false;
        if (is_const || a != 1) {
            os << a.get_str();
            printed_coeff = true;
        }
        for (int v = 0; v < kNumVars; ++v) {
            if (t.mono[v] == 0) continue;
            if (printed_coeff) os << "*";
            os << kVarNames[v];
            if (t.mono[v] > 1) os << "^" << int(t.mono[v]);
            printed_coeff = true;
        }
    }
    return os.str();
}

TracePoly operator*(const mpq_class& c, const TracePoly& p) { return p.scaled(c); }

}  // namespace charscheme
