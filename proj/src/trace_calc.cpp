#include "charscheme/trace_calc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "charscheme/chebyshev.hpp"

namespace charscheme {

namespace {

Var base_var(Gen g) {
    switch (g) {
        case Gen::kH: return kU;
        case Gen::kC1: return kX1;
        case Gen::kC2: return kX2;
    }
    throw std::logic_error("bad generator");
}

/// Letter rank for canonical rotations: h < c1 < c2 < h^-1 < c1^-1 < c2^-1.
int letter_rank(Gen g, bool inv) { return static_cast<int>(g) + (inv ? 3 : 0); }

}  // namespace

GroupWord::GroupWord(std::vector<Syllable> syllables) {
    for (const auto& s : syllables) {
        if (s.exp == 0) continue;
        if (!syl_.empty() && syl_.back().gen == s.gen) {
            syl_.back().exp += s.exp;
            if (syl_.back().exp == 0) syl_.pop_back();
        } else {
            syl_.push_back(s);
        }
    }
}

GroupWord GroupWord::generator(Gen g, long exp) { return GroupWord({Syllable{g, exp}}); }

GroupWord GroupWord::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<Syllable> syl;
    std::string tok;
    while (is >> tok) {
        std::string name = tok;
        long exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                exp = std::stol(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in word token: " + tok);
            }
        }
        Gen g;
        if (name == "h")
            g = Gen::kH;
        else if (name == "c1")
            g = Gen::kC1;
        else if (name == "c2")
            g = Gen::kC2;
        else
            throw std::invalid_argument("unknown generator in word token: " + tok);
        syl.push_back(Syllable{g, exp});
    }
    return GroupWord(std::move(syl));
}

long GroupWord::letter_count() const {
    long n = 0;
    for (const auto& s : syl_) n += std::labs(s.exp);
    return n;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
    std::vector<Syllable> all = syl_;
    all.insert(all.end(), rhs.syl_.begin(), rhs.syl_.end());
    return GroupWord(std::move(all));
}

GroupWord GroupWord::inverse() const {
    std::vector<Syllable> out;
    out.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) out.push_back(Syllable{it->gen, -it->exp});
    return GroupWord(std::move(out));
}

std::string GroupWord::str() const {
    if (syl_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syl_) {
        if (!first) os << " ";
        first = false;
        switch (s.gen) {
            case Gen::kH: os << "h"; break;
            case Gen::kC1: os << "c1"; break;
            case Gen::kC2: os << "c2"; break;
        }
        if (s.exp != 1) os << "^" << s.exp;
    }
    return os.str();
}

GroupWord word_reduce(const GroupWord& w) {
    std::vector<Syllable> syl = w.syllables();
    // cyclic reduction: merge the boundary while first and last share a generator
    while (syl.size() >= 2 && syl.front().gen == syl.back().gen) {
        syl.front().exp += syl.back().exp;
        syl.pop_back();
        if (syl.front().exp == 0) syl.erase(syl.begin());
    }
    if (syl.empty()) return GroupWord{};
    // expand to letters, pick the lexicographically least rotation
    std::vector<std::pair<Gen, bool>> letters;  // (generator, inverted)
    for (const auto& s : syl) {
        for (long i = 0; i < std::labs(s.exp); ++i) letters.emplace_back(s.gen, s.exp < 0);
    }
    const std::size_t L = letters.size();
    auto rank_at = [&](std::size_t start, std::size_t offset) {
        const auto& [g, inv] = letters[(start + offset) % L];
        return letter_rank(g, inv);
    };
    std::size_t best = 0;
    for (std::size_t cand = 1; cand < L; ++cand) {
        for (std::size_t k = 0; k < L; ++k) {
            int a = rank_at(cand, k), b = rank_at(best, k);
            if (a != b) {
                if (a < b) best = cand;
                break;
            }
        }
    }
    std::vector<Syllable> out;
    for (std::size_t k = 0; k < L; ++k) {
        const auto& [g, inv] = letters[(best + k) % L];
        long e = inv ? -1 : 1;
        if (!out.empty() && out.back().gen == g && (out.back().exp < 0) == inv)
            out.back().exp += e;
        else
            out.push_back(Syllable{g, e});
    }
    return GroupWord(std::move(out));
}

const TracePoly& charring_relation() {
    static const TracePoly f = [] {
        TracePoly u = TracePoly::variable(kU);
        TracePoly x1 = TracePoly::variable(kX1);
        TracePoly x2 = TracePoly::variable(kX2);
        TracePoly x3 = TracePoly::variable(kX3);
        TracePoly y1 = TracePoly::variable(kY1);
        TracePoly y2 = TracePoly::variable(kY2);
        TracePoly y3 = TracePoly::variable(kY3);
        TracePoly lin = u * x3 + x1 * y2 + x2 * y1 - u * x1 * x2;
        TracePoly cst = u * u + x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2 + x3 * x3 + y1 * y2 * x3 -
                        u * x1 * y1 - u * x2 * y2 - x1 * x2 * x3 - TracePoly::constant(4);
        return y3 * y3 - lin * y3 + cst;
    }();
    return f;
}

TracePoly reduce_mod_relation(const TracePoly& p) {
    // F = y3^2 - B y3 + C, monic in y3, so y3^2 -> B y3 - C.
    static const TracePoly b = [] {
        TracePoly u = TracePoly::variable(kU);
        return u * TracePoly::variable(kX3) + TracePoly::variable(kX1) * TracePoly::variable(kY2) +
               TracePoly::variable(kX2) * TracePoly::variable(kY1) -
               u * TracePoly::variable(kX1) * TracePoly::variable(kX2);
    }();
    static const TracePoly c = [] {
        TracePoly y3 = TracePoly::variable(kY3);
        return y3 * y3 - b * y3 - charring_relation();  // -C = F - y3^2 + B y3, negated
    }();
    TracePoly r = p;
    for (;;) {
        int k = r.degree_in(kY3);
        if (k <= 1) return r;
        TracePoly high;  // coefficient of y3^k, with y3 stripped
        TracePoly rest;
        for (const auto& t : r.terms()) {
            if (int(t.mono[kY3]) == k) {
                Monomial m = t.mono;
                m[kY3] = 0;
                high += TracePoly::monomial(t.coeff, m);
            } else {
                rest += TracePoly::monomial(t.coeff, t.mono);
            }
        }
        Monomial shift{};
        shift[kY3] = static_cast<std::uint16_t>(k - 2);
        TracePoly y3 = TracePoly::variable(kY3);
        r = rest + high.mul_term(1, shift) * (b * y3 + c);
    }
}

TracePoly TraceReducer::reduce(const GroupWord& w) { return reduce_canonical(word_reduce(w)); }

TracePoly TraceReducer::reduce_canonical(const GroupWord& w) {
    std::vector<long> key;
    key.reserve(2 * w.syllables().size());
    for (const auto& s : w.syllables()) {
        key.push_back(static_cast<long>(s.gen));
        key.push_back(s.exp);
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (in_progress_.count(key)) throw std::logic_error("cyclic trace reduction");
    in_progress_[key] = true;

    const auto& syl = w.syllables();
    TracePoly result;
    auto rotate_from = [&](std::size_t i) {
        std::vector<Syllable> rot(syl.begin() + i, syl.end());
        rot.insert(rot.end(), syl.begin(), syl.begin() + i);
        return rot;
    };

    if (syl.empty()) {
        result = TracePoly::constant(2);
    } else if (syl.size() == 1) {
        result = TracePoly::from_univariate(cheb_T(syl[0].exp), base_var(syl[0].gen));
    } else {
        std::size_t big = syl.size();
        for (std::size_t i = 0; i < syl.size(); ++i) {
            if (std::labs(syl[i].exp) >= 2 &&
                (big == syl.size() || std::labs(syl[i].exp) > std::labs(syl[big].exp)))
                big = i;
        }
        if (big != syl.size()) {
            // t_{g^n R} = S_n(t_g) t_{gR} - S_{n-1}(t_g) t_R
            auto rot = rotate_from(big);
            long n = rot[0].exp;
            Gen g = rot[0].gen;
            std::vector<Syllable> rest(rot.begin() + 1, rot.end());
            GroupWord r{rest};
            GroupWord gr = GroupWord::generator(g) * r;
            Var xg = base_var(g);
            result = TracePoly::from_univariate(cheb_S(n), xg) * reduce(gr) -
                     TracePoly::from_univariate(cheb_S(n - 1), xg) * reduce(r);
        } else {
            std::size_t neg = syl.size();
            for (std::size_t i = 0; i < syl.size(); ++i) {
                if (syl[i].exp == -1) {
                    neg = i;
                    break;
                }
            }
            if (neg != syl.size()) {
                // t_{g^{-1} R} = t_g t_R - t_{g R}
                auto rot = rotate_from(neg);
                Gen g = rot[0].gen;
                std::vector<Syllable> rest(rot.begin() + 1, rot.end());
                GroupWord r{rest};
                GroupWord gr = GroupWord::generator(g) * r;
                result = TracePoly::variable(base_var(g)) * reduce(r) - reduce(gr);
            } else if (syl.size() == 2) {
                // canonical two-letter positive words: h c1, h c2, c1 c2
                if (syl[0].gen == Gen::kH)
                    result = TracePoly::variable(syl[1].gen == Gen::kC1 ? kY1 : kY2);
                else
                    result = TracePoly::variable(kX3);
            } else if (syl.size() == 3 && syl[0].gen == Gen::kH && syl[1].gen == Gen::kC1 &&
                       syl[2].gen == Gen::kC2) {
                result = TracePoly::variable(kY3);
            } else if (syl.size() == 3) {
                // the other positive three-letter class: t_{xy} = t_x t_y - t_{x y^{-1}}
                GroupWord head = GroupWord::generator(syl[0].gen);
                GroupWord tail{{syl[1], syl[2]}};
                result = TracePoly::variable(base_var(syl[0].gen)) * reduce(tail) -
                         reduce(head * tail.inverse());
            } else {
                // length >= 4, all exponents 1: some generator repeats, so
                // w ~ g A g B and t_w = t_{gA} t_{gB} - t_{A B^{-1}}
                std::size_t first = syl.size(), second = syl.size();
                for (std::size_t i = 0; i < syl.size() && second == syl.size(); ++i) {
                    for (std::size_t j = i + 1; j < syl.size(); ++j) {
                        if (syl[j].gen == syl[i].gen) {
                            first = i;
                            second = j;
                            break;
                        }
                    }
                }
                if (second == syl.size()) throw std::logic_error("no repeated generator in long word");
                auto rot = rotate_from(first);
                std::size_t gap = second - first;
                std::vector<Syllable> a(rot.begin() + 1, rot.begin() + gap);
                std::vector<Syllable> b(rot.begin() + gap + 1, rot.end());
                GroupWord ga = GroupWord::generator(rot[0].gen) * GroupWord{a};
                GroupWord gb = GroupWord::generator(rot[gap].gen) * GroupWord{b};
                result = reduce(ga) * reduce(gb) - reduce(GroupWord{a} * GroupWord{b}.inverse());
            }
        }
    }

    result = reduce_mod_relation(result);
    in_progress_.erase(key);
    memo_.emplace(key, result);
    return result;
}

TracePoly trace_reduce(const GroupWord& w) {
    TraceReducer r;
    return r.reduce(w);
}

}  // namespace charscheme
