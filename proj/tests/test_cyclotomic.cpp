#include <doctest.h>

#include <random>

#include "charscheme/cyclotomic.hpp"

using namespace charscheme;

namespace {

CycloNumber random_element(std::mt19937& rng, unsigned n) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    unsigned d = euler_phi(n);
    CycloNumber acc = CycloNumber::zero(n);
    for (unsigned i = 0; i < d; ++i) {
        mpq_class q(coeff(rng), den(rng));
        q.canonicalize();
        acc += CycloNumber::from_rational(q, n) * CycloNumber::root_of_unity(n, i);
    }
    return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPoly(std::vector<mpz_class>{-1, 1}));
    CHECK(cyclotomic_polynomial(2) == IntPoly(std::vector<mpz_class>{1, 1}));
    CHECK(cyclotomic_polynomial(5) == IntPoly(std::vector<mpz_class>{1, 1, 1, 1, 1}));
    CHECK(cyclotomic_polynomial(12) == IntPoly(std::vector<mpz_class>{1, 0, -1, 0, 1}));
    CHECK(euler_phi(60) == 16);
}

TEST_CASE("roots of unity: zeta^N = 1 and Phi_N(zeta) = 0 for N <= 60") {
    for (unsigned n = 1; n <= 60; ++n) {
        CycloNumber z = CycloNumber::root_of_unity(n, 1);
        CHECK(z.pow(n) == CycloNumber::one(n));
        const IntPoly& phi = cyclotomic_polynomial(n);
        CycloNumber acc = CycloNumber::zero(n);
        for (int i = 0; i <= phi.degree(); ++i)
            acc += CycloNumber::from_rational(mpq_class(phi.coeff(i)), n) * z.pow(i);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("embedding examples") {
    CHECK(CycloNumber::root_of_unity(12, 0) == CycloNumber::one(12));
    CHECK(CycloNumber::root_of_unity(12, 6) == -CycloNumber::one(12));
    // zeta_5 satisfies z^4 + z^3 + z^2 + z + 1 = 0
    CycloNumber z = CycloNumber::root_of_unity(5, 1);
    CycloNumber sum = z.pow(4) + z.pow(3) + z.pow(2) + z + CycloNumber::one(5);
    CHECK(sum.is_zero());
    // negative exponents reduce mod N
    CHECK(CycloNumber::root_of_unity(5, -1) == z.pow(4));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(20240811);
    for (unsigned n : {4u, 9u, 12u, 30u}) {
        for (int iter = 0; iter < 20; ++iter) {
            CycloNumber a = random_element(rng, n);
            CycloNumber b = random_element(rng, n);
            CycloNumber c = random_element(rng, n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == CycloNumber::one(n));
            }
        }
    }
}

TEST_CASE("rational values and rendering") {
    CycloNumber half = CycloNumber::from_rational(mpq_class(1, 2), 8);
    CHECK(half.is_rational());
    CHECK(half.rational_value() == mpq_class(1, 2));
    CHECK(half.str() == "1/2");
    CycloNumber z = CycloNumber::root_of_unity(8, 1);
    CHECK(z.str() == "z");
    CHECK((z + z).str() == "2*z");
}

TEST_CASE("rank: basic examples") {
    CycloMatrix zero(3, 3, 4);
    CHECK(cyclo_rank(zero) == 0);
    CycloMatrix id(4, 4, 4);
    for (int i = 0; i < 4; ++i) id.at(i, i) = CycloNumber::one(4);
    CHECK(cyclo_rank(id) == 4);
    // rank 1: outer product
    CycloMatrix outer(3, 3, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            outer.at(i, j) = CycloNumber::root_of_unity(5, i) * CycloNumber::root_of_unity(5, j);
    CHECK(cyclo_rank(outer) == 1);
}

TEST_CASE("rank(M) == rank(M^T) on random matrices") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int iter = 0; iter < 15; ++iter) {
        unsigned n = 12;
        std::size_t r = dim(rng), c = dim(rng);
        CycloMatrix m(r, c, n);
        std::uniform_int_distribution<int> sparse(0, 2);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (sparse(rng) != 0) m.at(i, j) = random_element(rng, n);
        CHECK(cyclo_rank(m) == cyclo_rank(m.transpose()));
    }
}

TEST_CASE("kernel vectors satisfy M v = 0") {
    std::mt19937 rng(99);
    unsigned n = 8;
    CycloMatrix m(3, 5, n);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = random_element(rng, n);
    auto basis = cyclo_kernel(m);
    CHECK(basis.size() == 5 - cyclo_rank(m));
    for (const auto& v : basis) {
        for (std::size_t i = 0; i < 3; ++i) {
            CycloNumber acc = CycloNumber::zero(n);
            for (std::size_t j = 0; j < 5; ++j) acc += m.at(i, j) * v[j];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("solve: identity, zero, and substitution check") {
    unsigned n = 12;
    CycloMatrix id(3, 3, n);
    for (int i = 0; i < 3; ++i) id.at(i, i) = CycloNumber::one(n);
    std::vector<CycloNumber> b = {CycloNumber::root_of_unity(n, 1), CycloNumber::from_integer(2, n),
                                  CycloNumber::zero(n)};
    auto x = cyclo_solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CycloMatrix zero(2, 2, n);
    std::vector<CycloNumber> nonzero = {CycloNumber::one(n), CycloNumber::zero(n)};
    CHECK(!cyclo_solve(zero, nonzero).has_value());

    std::mt19937 rng(5);
    CycloMatrix m(4, 3, n);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = random_element(rng, n);
    // consistent rhs: b = M * w
    std::vector<CycloNumber> w = {CycloNumber::root_of_unity(n, 2), CycloNumber::from_integer(-1, n),
                                  CycloNumber::from_rational(mpq_class(3, 2), n)};
    std::vector<CycloNumber> rhs(4, CycloNumber::zero(n));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) rhs[i] += m.at(i, j) * w[j];
    auto sol = cyclo_solve(m, rhs);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < 4; ++i) {
        CycloNumber acc = CycloNumber::zero(n);
        for (std::size_t j = 0; j < 3; ++j) acc += m.at(i, j) * (*sol)[j];
        CHECK(acc == rhs[i]);
    }

    std::vector<CycloNumber> bad(3, CycloNumber::zero(n));
    CHECK_THROWS_AS(cyclo_solve(m, bad), std::invalid_argument);
}

TEST_CASE("conductor mismatch is an error") {
    CycloNumber a = CycloNumber::one(4);
    CycloNumber b = CycloNumber::one(8);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}
