#include "charscheme/characters.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace charscheme {

namespace {

long lmod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

/// kappa = x1^2 + x2^2 + x3^2 - x1 x2 x3 - 4, the reducibility cut.
bool kappa_nonzero(unsigned n, long e1, long e2, long e3) {
    auto coord = [&](long e) {
        return CycloNumber::root_of_unity(n, e) + CycloNumber::root_of_unity(n, -e);
    };
    CycloNumber x1 = coord(e1), x2 = coord(e2), x3 = coord(e3);
    CycloNumber k = x1 * x1 + x2 * x2 + x3 * x3 - x1 * x2 * x3 -
                    CycloNumber::from_integer(4, n);
    return !k.is_zero();
}

}  // namespace

std::array<CycloNumber, kNumVars> CharacterPoint::coords_at(unsigned m) const {
    std::array<CycloNumber, kNumVars> out{
        CycloNumber::zero(m), CycloNumber::zero(m), CycloNumber::zero(m), CycloNumber::zero(m),
        CycloNumber::zero(m), CycloNumber::zero(m), CycloNumber::zero(m)};
    for (int i = 0; i < kNumVars; ++i) {
        long e = lmod(exps[i], conductor);
        long order = conductor / std::gcd<long>(conductor, e == 0 ? conductor : e);
        if (m % order != 0) throw std::invalid_argument("conductor does not contain point roots");
        long scaled = static_cast<long>((static_cast<long long>(e) * m) / conductor);
        out[i] = CycloNumber::root_of_unity(m, scaled) + CycloNumber::root_of_unity(m, -scaled);
    }
    return out;
}

unsigned CharacterPoint::minimal_conductor() const {
    long n = 2;
    auto fold = [&](long e) {
        e = lmod(e, conductor);
        long order = e == 0 ? 1 : conductor / std::gcd<long>(conductor, e);
        n = std::lcm(n, order);
    };
    for (int i = 0; i < kNumVars; ++i) fold(exps[i]);
    if (const auto* w = std::get_if<IrreducibleWitness>(&witness)) {
        for (long e : w->zeta_exp) fold(e);
    } else {
        const auto& w2 = std::get<AbelianWitness>(witness);
        fold(w2.m_exp);
        fold(w2.a1_exp);
        fold(w2.a2_exp);
    }
    return static_cast<unsigned>(n);
}

std::array<long, kNumVars> CharacterPoint::canonical_key() const {
    std::array<long, kNumVars> key{};
    for (int i = 0; i < kNumVars; ++i) {
        long e = lmod(exps[i], conductor);
        key[i] = std::min(e, static_cast<long>(conductor) - e);
    }
    return key;
}

long p_plus(long p) { return (p + 1) / 2 - 1; }
long p_minus(long p) { return p / 2; }

unsigned global_conductor(const SeifertParams& s, const HomologyData& h) {
    long n = 2;
    for (long p : s.p) n = std::lcm(n, 2 * p);
    if (h.finite) {
        long h1 = h.order_h1.get_si();
        if (n % h1 != 0) n = std::lcm(n, h1);
    }
    return static_cast<unsigned>(n);
}

std::vector<CharacterPoint> enumerate_abelian(const SeifertParams& s, const HomologyData& h,
                                              unsigned conductor) {
    if (!h.finite) throw std::domain_error("infinite first homology (Euler number zero)");
    const long n = static_cast<long>(conductor);
    std::array<long, 3> d;
    for (int i = 0; i < 3; ++i) {
        d[i] = h.invariant_factors[i].get_si();
        if (n % d[i] != 0) throw std::logic_error("conductor misses homology torsion");
    }
    std::array<std::array<long, 3>, 3> cls;  // [generator][factor]
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) cls[j][i] = h.classes[j][i].get_si();

    std::vector<CharacterPoint> out;
    std::array<long, 3> t{};
    for (t[0] = 0; t[0] < d[0]; ++t[0])
        for (t[1] = 0; t[1] < d[1]; ++t[1])
            for (t[2] = 0; t[2] < d[2]; ++t[2]) {
                // one representative per inversion class {phi, phi^-1}
                std::array<long, 3> neg;
                for (int i = 0; i < 3; ++i) neg[i] = lmod(-t[i], d[i]);
                if (neg < t) continue;
                auto value_exp = [&](int gen) {
                    long e = 0;
                    for (int i = 0; i < 3; ++i) e = lmod(e + t[i] * (n / d[i]) * cls[gen][i], n);
                    return e;
                };
                long m = value_exp(0), a1 = value_exp(1), a2 = value_exp(2);
                long a3 = lmod(a1 + a2, n);
                CharacterPoint pt;
                pt.conductor = conductor;
                pt.kind = PointKind::kAbelian;
                pt.exps = {m, a1, a2, a3, lmod(m + a1, n), lmod(m + a2, n), lmod(m + a3, n)};
                auto is_pm1 = [&](long e) { return e == 0 || 2 * e == n; };
                pt.exceptional = is_pm1(m) && !is_pm1(a1) && !is_pm1(a2) && !is_pm1(a3);
                pt.witness = AbelianWitness{m, a1, a2};
                out.push_back(pt);
            }
    return out;
}

std::vector<CharacterPoint> enumerate_irreducible(const SeifertParams& s, unsigned conductor) {
    // eigenvalue roots live in the small field lcm(2, 2 p_i); enumerate and
    // run the kappa cut there, then scale exponents into the ambient field
    long n0 = 2;
    for (long p : s.p) n0 = std::lcm(n0, 2 * p);
    const long n = static_cast<long>(conductor);
    if (n % n0 != 0) throw std::invalid_argument("conductor misses eigenvalue roots");
    const long scale = n / n0;

    std::vector<CharacterPoint> out;
    for (int eps : {1, -1}) {
        const long eps_exp0 = eps == 1 ? 0 : n0 / 2;
        // inversion classes of solutions of zeta^{p_i} = eps^{q_i}, zeta != +-1
        std::array<std::vector<long>, 3> classes;
        for (int i = 0; i < 3; ++i) {
            long target = lmod(eps_exp0 * s.q[i], n0);
            for (long e = 1; 2 * e < n0; ++e) {
                if (lmod(s.p[i] * e, n0) == target) classes[i].push_back(e);
            }
            long expected = (eps == 1 || s.q[i] % 2 == 0) ? p_plus(s.p[i]) : p_minus(s.p[i]);
            if (static_cast<long>(classes[i].size()) != expected)
                throw std::logic_error("eigenvalue class count disagrees with p+/p-");
        }
        for (long e1 : classes[0])
            for (long e2 : classes[1])
                for (long e3 : classes[2]) {
                    if (!kappa_nonzero(static_cast<unsigned>(n0), e1, e2, e3)) continue;
                    CharacterPoint pt;
                    pt.conductor = conductor;
                    pt.kind = PointKind::kIrreducible;
                    pt.exceptional = false;
                    const long eps_exp = eps_exp0 * scale;
                    pt.exps = {eps_exp,
                               e1 * scale,
                               e2 * scale,
                               e3 * scale,
                               lmod(eps_exp + e1 * scale, n),
                               lmod(eps_exp + e2 * scale, n),
                               lmod(eps_exp + e3 * scale, n)};
                    pt.witness = IrreducibleWitness{eps, {e1 * scale, e2 * scale, e3 * scale}};
                    out.push_back(pt);
                }
    }
    return out;
}

mpz_class theorem_point_count_rhs(const SeifertParams& s, const HomologyData& h, std::size_t x_m) {
    return theorem_dimension_rhs(s, h) - static_cast<long>(x_m);
}

mpz_class theorem_dimension_rhs(const SeifertParams& s, const HomologyData& h) {
    mpz_class plus = 1, minus = 1;
    for (long p : s.p) {
        plus *= p_plus(p);
        minus *= p_minus(p);
    }
    return plus + minus + (h.order_h1 + h.order_h1_z2) / 2;
}

Census census(const SeifertParams& s) {
    if (s.euler == 0) throw std::domain_error("Euler number must be nonzero");
    Census c;
    c.params = s;
    c.homology = homology(s);
    if (!c.homology.finite) throw std::domain_error("infinite first homology");
    c.conductor = global_conductor(s, c.homology);

    std::vector<CharacterPoint> ab = enumerate_abelian(s, c.homology, c.conductor);
    std::vector<CharacterPoint> irr = enumerate_irreducible(s, c.conductor);
    c.num_abelian = ab.size();
    c.num_irreducible = irr.size();

    // the abelian count identity (half of |H1| plus the 2-torsion count)
    mpz_class expected_ab = (c.homology.order_h1 + c.homology.order_h1_z2) / 2;
    if (mpz_class(static_cast<long>(ab.size())) != expected_ab)
        throw std::logic_error("abelian census does not match (|H1|+|H1(Z/2)|)/2");

    c.points = std::move(ab);
    c.points.insert(c.points.end(), irr.begin(), irr.end());

    std::set<std::array<long, kNumVars>> keys;
    for (const auto& pt : c.points) {
        if (!keys.insert(pt.canonical_key()).second)
            throw std::logic_error("duplicate character point in census");
    }
    for (const auto& pt : c.points)
        if (pt.exceptional) ++c.x_m;

    c.count_formula_rhs = theorem_point_count_rhs(s, c.homology, c.x_m);
    if (mpz_class(static_cast<long>(c.points.size())) != c.count_formula_rhs)
        throw std::logic_error("census size does not match the point-count formula");
    return c;
}

}  // namespace charscheme
