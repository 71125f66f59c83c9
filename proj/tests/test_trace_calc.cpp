#include <doctest.h>

#include <random>

#include "charscheme/chebyshev.hpp"
#include "charscheme/trace_calc.hpp"
#include "sl2_numeric.hpp"

using namespace charscheme;
using namespace charscheme::testing;

namespace {
GroupWord W(const std::string& s) { return GroupWord::parse(s); }
}  // namespace

TEST_CASE("word reduction") {
    CHECK(word_reduce(W("h c1 c1^-1")) == W("h"));
    CHECK(word_reduce(W("c1 h c1^-1")) == W("h"));
    // canonical rotation is the least letter sequence under h < c1 < c2 < inverses
    CHECK(word_reduce(W("c2 h c1")) == W("h c1 c2"));
    CHECK(word_reduce(W("c2 h h c1")) == W("h^2 c1 c2"));
    CHECK(word_reduce(W("c1^2 c1^-2")).empty());
    CHECK(word_reduce(W("c1 h^3 c1^-1 c1")) == W("h^3 c1"));
}

TEST_CASE("base traces") {
    CHECK(trace_reduce(GroupWord{}) == TracePoly::constant(2));
    CHECK(trace_reduce(W("h")) == TracePoly::variable(kU));
    CHECK(trace_reduce(W("c1")) == TracePoly::variable(kX1));
    CHECK(trace_reduce(W("c2")) == TracePoly::variable(kX2));
    CHECK(trace_reduce(W("c1 c2")) == TracePoly::variable(kX3));
    CHECK(trace_reduce(W("h c1")) == TracePoly::variable(kY1));
    CHECK(trace_reduce(W("h c2")) == TracePoly::variable(kY2));
    CHECK(trace_reduce(W("h c1 c2")) == TracePoly::variable(kY3));
}

TEST_CASE("the three worked traces") {
    TracePoly u = TracePoly::variable(kU), x1 = TracePoly::variable(kX1),
              x2 = TracePoly::variable(kX2), x3 = TracePoly::variable(kX3),
              y1 = TracePoly::variable(kY1), y2 = TracePoly::variable(kY2),
              y3 = TracePoly::variable(kY3);
    CHECK(trace_reduce(W("h c2 c1")) == u * (x3 - x1 * x2) + y1 * x2 + x1 * y2 - y3);
    CHECK(trace_reduce(W("h c2 h c1")) == y1 * y2 + x3 - x1 * x2);
    CHECK(trace_reduce(W("c2 h h c1")) == u * y3 - x3);
}

TEST_CASE("powers: t(h^n) = T_n(u) for |n| <= 12") {
    for (long n = -12; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(trace_reduce(GroupWord::generator(Gen::kH, n)) ==
              TracePoly::from_univariate(cheb_T(n), kU));
        CHECK(trace_reduce(GroupWord::generator(Gen::kC1, n)) ==
              TracePoly::from_univariate(cheb_T(n), kX1));
    }
}

TEST_CASE("power-shift rule t(c1^n b) = S_n(x1) t(c1 b) - S_{n-1}(x1) t(b)") {
    TraceReducer red;
    for (long n = 2; n <= 12; ++n) {
        for (const char* b : {"h", "c2"}) {
            CAPTURE(n);
            CAPTURE(b);
            GroupWord w = GroupWord::generator(Gen::kC1, n) * W(b);
            TracePoly rhs = TracePoly::from_univariate(cheb_S(n), kX1) *
                                red.reduce(GroupWord::generator(Gen::kC1) * W(b)) -
                            TracePoly::from_univariate(cheb_S(n - 1), kX1) * red.reduce(W(b));
            CHECK(red.reduce(w) == reduce_mod_relation(rhs));
        }
    }
}

TEST_CASE("defining relation F of the free-group character ring") {
    const TracePoly& f = charring_relation();
    Monomial y3sq{};
    y3sq[kY3] = 2;
    CHECK(f.coefficient_of(y3sq) == 1);
    // linear y3 part equals -(u x3 + x1 y2 + x2 y1 - u x1 x2)
    TracePoly lin;
    for (const auto& t : f.terms()) {
        if (t.mono[kY3] == 1) {
            Monomial m = t.mono;
            m[kY3] = 0;
            lin += TracePoly::monomial(t.coeff, m);
        }
    }
    TracePoly u = TracePoly::variable(kU), x1 = TracePoly::variable(kX1),
              x2 = TracePoly::variable(kX2), x3 = TracePoly::variable(kX3),
              y1 = TracePoly::variable(kY1), y2 = TracePoly::variable(kY2);
    CHECK(lin == -(u * x3 + x1 * y2 + x2 * y1 - u * x1 * x2));

    // F vanishes at the Fricke coordinates of 500 random SL2 triples
    std::mt19937 rng(2718);
    for (int i = 0; i < 500; ++i) {
        Mat2 h = random_sl2(rng), c1 = random_sl2(rng), c2 = random_sl2(rng);
        auto coords = fricke_coords(h, c1, c2);
        CHECK(std::abs(f.eval_complex(coords)) <= 1e-9);
    }
}

TEST_CASE("numeric soundness on random words") {
    std::mt19937 rng(31415);
    TraceReducer red;
    for (int i = 0; i < 200; ++i) {
        GroupWord w = random_word(rng, 10);
        Mat2 h = random_sl2(rng), c1 = random_sl2(rng), c2 = random_sl2(rng);
        auto coords = fricke_coords(h, c1, c2);
        std::complex<double> direct = eval_word(w, h, c1, c2).trace();
        std::complex<double> symbolic = red.reduce(w).eval_complex(coords);
        CAPTURE(w.str());
        CHECK(std::abs(direct - symbolic) <= 1e-8);
    }
}

TEST_CASE("conjugation and inversion invariance") {
    std::mt19937 rng(16180);
    TraceReducer red;
    for (int i = 0; i < 80; ++i) {
        GroupWord w = random_word(rng, 6);
        GroupWord g = random_word(rng, 3);
        CHECK(red.reduce(w) == red.reduce(g * w * g.inverse()));
        CHECK(red.reduce(w) == red.reduce(w.inverse()));
    }
}

TEST_CASE("fundamental trace relation modulo (F)") {
    std::mt19937 rng(300);
    TraceReducer red;
    for (int i = 0; i < 60; ++i) {
        GroupWord x = random_word(rng, 5);
        GroupWord y = random_word(rng, 5);
        TracePoly lhs = red.reduce(x * y) + red.reduce(x * y.inverse());
        TracePoly rhs = reduce_mod_relation(red.reduce(x) * red.reduce(y));
        CHECK(lhs == rhs);
    }
}
