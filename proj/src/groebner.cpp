#include "charscheme/groebner.hpp"

#include <algorithm>
#include <map>

#include "charscheme/cyclotomic.hpp"

namespace charscheme {

namespace {

// Working polynomials are term vectors sorted descending under the chosen
// order, with integer content-free coefficients and positive leading sign.
using TermVec = std::vector<Term>;

TermVec to_termvec(const TracePoly& p, MonomialOrder ord) {
    TermVec t(p.terms().begin(), p.terms().end());
    if (ord != MonomialOrder::kDegRevLex)
        std::sort(t.begin(), t.end(),
                  [ord](const Term& a, const Term& b) { return mono_cmp(ord, a.mono, b.mono) > 0; });
    return t;
}

TracePoly to_poly(const TermVec& t) {
    TracePoly p;
    for (const auto& term : t) p += TracePoly::monomial(term.coeff, term.mono);
    return p;
}

/// sa * A - sb * (x^m * B), merged in one pass.
TermVec combine(const TermVec& a, const mpq_class& sa, const TermVec& b, const mpq_class& sb,
                const Monomial& m, MonomialOrder ord) {
    TermVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size()) {
            out.push_back({a[i].mono, sa * a[i].coeff});
            ++i;
            continue;
        }
        Monomial bm = mono_mul(b[j].mono, m);
        if (i >= a.size()) {
            out.push_back({bm, -sb * b[j].coeff});
            ++j;
            continue;
        }
        int c = mono_cmp(ord, a[i].mono, bm);
        if (c > 0) {
            out.push_back({a[i].mono, sa * a[i].coeff});
            ++i;
        } else if (c < 0) {
            out.push_back({bm, -sb * b[j].coeff});
            ++j;
        } else {
            mpq_class v = sa * a[i].coeff - sb * b[j].coeff;
            if (v != 0) out.push_back({a[i].mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

/// Divide out the integer content and make the leading coefficient positive.
void strip_content(TermVec& t) {
    if (t.empty()) return;
    mpz_class g = 0;
    for (const auto& term : t) {
        g = zgcd(g, term.coeff.get_num());
        if (g == 1) break;
    }
    if (t.front().coeff < 0) g = -g;
    if (g != 1)
        for (auto& term : t) term.coeff /= g;
}

/// Clear denominators of a rational input and normalize.
TermVec normalize_input(const TracePoly& p, MonomialOrder ord) {
    TermVec t = to_termvec(p, ord);
    mpz_class l = 1;
    for (const auto& term : t) l = zlcm(l, term.coeff.get_den());
    if (l != 1)
        for (auto& term : t) term.coeff *= l;
    strip_content(t);
    return t;
}

/// Integer pseudo-reduction of every term of h by G; prefix terms stay
/// irreducible under rescaling since irreducibility depends on monomials only.
TermVec fully_reduce(TermVec h, const std::vector<TermVec>& g, MonomialOrder ord) {
    std::size_t done = 0;
    while (done < h.size()) {
        bool reduced = false;
        for (const auto& gi : g) {
            if (gi.empty() || !mono_divides(gi.front().mono, h[done].mono)) continue;
            mpz_class ch = h[done].coeff.get_num();
            mpz_class cg = gi.front().coeff.get_num();
            mpz_class d = zgcd(ch, cg);
            Monomial shift = mono_div(h[done].mono, gi.front().mono);
            h = combine(h, mpq_class(cg / d), gi, mpq_class(ch / d), shift, ord);
            strip_content(h);
            reduced = true;
            break;
        }
        if (!reduced) ++done;
    }
    return h;
}

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm;
    int deg;
};

/// Gebauer-Moller update: append h to the basis, prune old pairs by the
/// chain criterion and new pairs by divisibility and the product criterion.
void gm_update(std::vector<TermVec>& g, std::vector<CriticalPair>& pairs, TermVec h,
               MonomialOrder ord) {
    const std::size_t t = g.size();
    const Monomial& lm_h = h.front().mono;

    std::vector<CriticalPair> survivors;
    survivors.reserve(pairs.size());
    for (auto& cp : pairs) {
        if (mono_divides(lm_h, cp.lcm) && mono_lcm(g[cp.i].front().mono, lm_h) != cp.lcm &&
            mono_lcm(g[cp.j].front().mono, lm_h) != cp.lcm)
            continue;
        survivors.push_back(cp);
    }
    pairs = std::move(survivors);

    std::vector<CriticalPair> fresh;
    fresh.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        Monomial l = mono_lcm(g[i].front().mono, lm_h);
        fresh.push_back({i, t, l, total_degree(l)});
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const CriticalPair& a, const CriticalPair& b) { return a.deg < b.deg; });
    std::vector<CriticalPair> minimal;
    for (const auto& cp : fresh) {
        bool dominated = false;
        for (const auto& kept : minimal) {
            if (mono_divides(kept.lcm, cp.lcm)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(cp);
    }
    for (const auto& cp : minimal) {
        // product criterion: coprime leading monomials reduce to zero anyway
        Monomial prod = mono_mul(g[cp.i].front().mono, lm_h);
        if (prod == cp.lcm) continue;
        pairs.push_back(cp);
    }
    g.push_back(std::move(h));
}

TermVec s_polynomial(const TermVec& f, const TermVec& g, const Monomial& lcm, MonomialOrder ord) {
    mpz_class cf = f.front().coeff.get_num();
    mpz_class cg = g.front().coeff.get_num();
    mpz_class d = zgcd(cf, cg);
    Monomial mf = mono_div(lcm, f.front().mono);
    Monomial mg = mono_div(lcm, g.front().mono);
    // (cg/d) x^mf f - (cf/d) x^mg g
    TermVec shifted_f;
    shifted_f.reserve(f.size());
    for (const auto& term : f) shifted_f.push_back({mono_mul(term.mono, mf), term.coeff});
    return combine(shifted_f, mpq_class(cg / d), g, mpq_class(cf / d), mg, ord);
}

/// Full rational normal form against a monic reduced basis.
TermVec rational_nf(TermVec h, const std::vector<TermVec>& g, MonomialOrder ord) {
    std::size_t done = 0;
    while (done < h.size()) {
        bool reduced = false;
        for (const auto& gi : g) {
            if (gi.empty() || !mono_divides(gi.front().mono, h[done].mono)) continue;
            mpq_class f = h[done].coeff / gi.front().coeff;
            Monomial shift = mono_div(h[done].mono, gi.front().mono);
            h = combine(h, mpq_class(1), gi, f, shift, ord);
            reduced = true;
            break;
        }
        if (!reduced) ++done;
    }
    return h;
}

void make_monic(TermVec& t) {
    if (t.empty()) return;
    mpq_class lc = t.front().coeff;
    for (auto& term : t) term.coeff /= lc;
}

}  // namespace

int GroebnerBasis::max_degree() const {
    int d = 0;
    for (const auto& p : basis) d = std::max(d, p.degree());
    return d;
}

GroebnerBasis groebner_compute(const std::vector<TracePoly>& gens, MonomialOrder order,
                               const BuchbergerBudget& budget) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    std::vector<TermVec> g;
    std::vector<CriticalPair> pairs;
    for (const auto& gen : gens) {
        if (gen.is_zero()) continue;
        TermVec t = normalize_input(gen, order);
        t = fully_reduce(std::move(t), g, order);
        if (t.empty()) continue;
        strip_content(t);
        gm_update(g, pairs, std::move(t), order);
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
            if (it->deg < best->deg ||
                (it->deg == best->deg && mono_cmp(order, it->lcm, best->lcm) < 0))
                best = it;
        }
        CriticalPair cp = *best;
        pairs.erase(best);
        if (++processed > budget.max_pairs) throw BudgetExceeded(processed);

        TermVec s = s_polynomial(g[cp.i], g[cp.j], cp.lcm, order);
        s = fully_reduce(std::move(s), g, order);
        if (!s.empty()) {
            strip_content(s);
            gm_update(g, pairs, std::move(s), order);
        }
    }

    // interreduce: drop redundant leading monomials, tail-reduce, make monic
    std::vector<TermVec> kept;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const Monomial &mi = g[i].front().mono, &mj = g[j].front().mono;
            if (mono_divides(mj, mi) && (mi != mj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g[i]);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<TermVec> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = rational_nf(std::move(kept[i]), others, order);
        make_monic(kept[i]);
    }
    std::sort(kept.begin(), kept.end(), [order](const TermVec& a, const TermVec& b) {
        return mono_cmp(order, a.front().mono, b.front().mono) < 0;
    });

    GroebnerBasis out;
    out.order = order;
    out.basis.reserve(kept.size());
    for (const auto& t : kept) out.basis.push_back(to_poly(t));
    return out;
}

TracePoly normal_form(const TracePoly& p, const GroebnerBasis& gb) {
    std::vector<TermVec> g;
    g.reserve(gb.basis.size());
    for (const auto& b : gb.basis) g.push_back(to_termvec(b, gb.order));
    return to_poly(rational_nf(to_termvec(p, gb.order), g, gb.order));
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    lms.reserve(gb.basis.size());
    for (const auto& b : gb.basis) {
        if (b.is_zero()) continue;
        lms.push_back(to_termvec(b, gb.order).front().mono);
        if (total_degree(lms.back()) == 0) return std::size_t(0);  // unit ideal
    }
    // a pure power of every variable must lead somewhere, else infinite
    std::array<int, kNumVars> bound{};
    for (int v = 0; v < kNumVars; ++v) {
        bound[v] = -1;
        for (const auto& m : lms) {
            bool pure = m[v] > 0;
            for (int w = 0; w < kNumVars && pure; ++w)
                if (w != v && m[w] > 0) pure = false;
            if (pure) bound[v] = bound[v] < 0 ? m[v] : std::min<int>(bound[v], m[v]);
        }
        if (bound[v] < 0) return std::nullopt;
    }
    // count monomials not divisible by any leading monomial; a subtree is
    // pruned once the prefix is divisible by a monomial supported on the
    // prefix variables alone
    std::array<int, kNumVars> support_max{};
    std::vector<int> lm_support(lms.size());
    for (std::size_t i = 0; i < lms.size(); ++i) {
        int mx = -1;
        for (int v = 0; v < kNumVars; ++v)
            if (lms[i][v] > 0) mx = v;
        lm_support[i] = mx;
    }
    std::size_t count = 0;
    Monomial cur{};
    auto rec = [&](auto&& self, int v) -> void {
        for (std::size_t i = 0; i < lms.size(); ++i) {
            if (lm_support[i] >= v) continue;
            if (mono_divides(lms[i], cur)) return;
        }
        if (v == kNumVars) {
            ++count;
            return;
        }
        for (int e = 0; e < bound[v]; ++e) {
            cur[v] = static_cast<std::uint16_t>(e);
            self(self, v + 1);
        }
        cur[v] = 0;
    };
    rec(rec, 0);
    return count;
}

bool ideals_equal(const std::vector<TracePoly>& a, const std::vector<TracePoly>& b,
                  const BuchbergerBudget& budget) {
    GroebnerBasis ga = groebner_compute(a, MonomialOrder::kDegRevLex, budget);
    GroebnerBasis gb = groebner_compute(b, MonomialOrder::kDegRevLex, budget);
    for (const auto& p : a)
        if (!normal_form(p, gb).is_zero()) return false;
    for (const auto& p : b)
        if (!normal_form(p, ga).is_zero()) return false;
    return true;
}

}  // namespace charscheme
