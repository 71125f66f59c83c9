#include "charscheme/homology.hpp"

#include <stdexcept>

#include "charscheme/cyclotomic.hpp"

namespace charscheme {

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// D <- E D (row op), mirrored on U so that D = U A V stays true.
void row_sub(IntMatrix& d, IntMatrix& u, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t c = 0; c < d[dst].size(); ++c) d[dst][c] -= q * d[src][c];
    for (std::size_t c = 0; c < u[dst].size(); ++c) u[dst][c] -= q * u[src][c];
}

void col_sub(IntMatrix& d, IntMatrix& v, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t r = 0; r < d.size(); ++r) d[r][dst] -= q * d[r][src];
    for (std::size_t r = 0; r < v.size(); ++r) v[r][dst] -= q * v[r][src];
}

void row_swap(IntMatrix& d, IntMatrix& u, std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d[a], d[b]);
    std::swap(u[a], u[b]);
}

void col_swap(IntMatrix& d, IntMatrix& v, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : d) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
}

void row_negate(IntMatrix& d, IntMatrix& u, std::size_t r) {
    for (auto& x : d[r]) x = -x;
    for (auto& x : u[r]) x = -x;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    SmithResult res{a, identity(m), identity(n)};
    IntMatrix& d = res.d;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // move a minimal nonzero entry of the trailing block to (t,t)
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (d[i][j] == 0) continue;
                    if (bi == m || abs(d[i][j]) < abs(d[bi][bj])) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == m) break;  // trailing block zero
            row_swap(d, res.u, t, bi);
            col_swap(d, res.v, t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d[i][t] == 0) continue;
                mpz_class q = d[i][t] / d[t][t];  // truncated division keeps |remainder| < |pivot|
                row_sub(d, res.u, i, t, q);
                if (d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d[t][j] == 0) continue;
                mpz_class q = d[t][j] / d[t][t];
                col_sub(d, res.v, j, t, q);
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders exist; reselect pivot

            // pivot must divide the whole trailing block for the factor chain
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_sub(d, res.u, t, i, mpz_class(-1));  // row_t += row_i
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d[t][t] < 0) row_negate(d, res.u, t);
    }
    return res;
}

HomologyData homology(const SeifertParams& s) {
    // relations p_i c_i - q_i h = 0 on generators (h, c1, c2), with c3 = c1 c2
    IntMatrix rel = {
        {mpz_class(-s.q[0]), mpz_class(s.p[0]), mpz_class(0)},
        {mpz_class(-s.q[1]), mpz_class(0), mpz_class(s.p[1])},
        {mpz_class(-s.q[2]), mpz_class(s.p[2]), mpz_class(s.p[2])},
    };
    // quotient by the image of the transpose; columns are the relation vectors
    IntMatrix b(3, std::vector<mpz_class>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = rel[j][i];
    SmithResult snf = smith_normal_form(b);

    HomologyData h;
    h.order_h1 = 1;
    h.order_h1_z2 = 1;
    h.finite = true;
    for (int i = 0; i < 3; ++i) {
        h.invariant_factors[i] = snf.d[i][i];
        if (h.invariant_factors[i] == 0) h.finite = false;
        h.order_h1 *= h.invariant_factors[i];
        if (h.invariant_factors[i] % 2 == 0) h.order_h1_z2 *= 2;
    }
    if (!h.finite) {
        h.order_h1 = 0;
        return h;
    }
    // class of generator e_j is the j-th column of U, reduced mod the factors
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            mpz_class c = snf.u[i][j] % h.invariant_factors[i];
            if (c < 0) c += h.invariant_factors[i];
            h.classes[j][i] = c;
        }
    }
    return h;
}

}  // namespace charscheme
