#include <vector>

#include "doctest.h"
#include "hyperdense/linalg.hpp"
#include "hyperdense/mpoly.hpp"
#include "hyperdense/polynomial.hpp"

using namespace hyperdense;

namespace {

// Small deterministic generator for property tests (no global RNG anywhere).
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    long next_small(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    QPoly poly(int max_deg) {
        std::vector<Rational> c(static_cast<size_t>(next_small(1, max_deg + 1)));
        for (auto& x : c) x = Rational(next_small(-9, 9));
        return QPoly(std::move(c));
    }
};

// Independent resultant oracle: determinant of the Sylvester matrix by
// rational Gaussian elimination.
Rational sylvester_resultant(const QPoly& a, const QPoly& b) {
    int m = a.degree(), n = b.degree();
    size_t dim = static_cast<size_t>(m + n);
    Matrix<Rational> s(dim, dim, Rational(0));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s.at(static_cast<size_t>(r), static_cast<size_t>(r + j)) = a[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s.at(static_cast<size_t>(n + r), static_cast<size_t>(r + j)) = b[n - j];
    // determinant via elimination
    Rational det(1);
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        while (piv < dim && s.at(piv, col) == 0) ++piv;
        if (piv == dim) return Rational(0);
        if (piv != col) {
            for (size_t j = 0; j < dim; ++j) std::swap(s.at(piv, j), s.at(col, j));
            det = -det;
        }
        det *= s.at(col, col);
        Rational inv = 1 / s.at(col, col);
        for (size_t r = col + 1; r < dim; ++r) {
            Rational f = s.at(r, col) * inv;
            if (f == 0) continue;
            for (size_t j = col; j < dim; ++j) s.at(r, j) -= f * s.at(col, j);
        }
    }
    return det;
}

}  // namespace

TEST_CASE("poly basics") {
    QPoly p({1, 0, 1});  // 1 + x^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == 5);
    CHECK(p.derivative() == QPoly({0, 2}));
    CHECK((p * p) == QPoly({1, 0, 2, 0, 1}));
    CHECK(p.shift(Rational(1)) == QPoly({2, 2, 1}));  // (x+1)^2 + 1
    QPoly q({-2, 0, 1});
    auto [quo, rem] = divmod(p, q);
    CHECK(quo == QPoly({1}));
    CHECK(rem == QPoly({3}));
}

TEST_CASE("poly_gcd examples") {
    QPoly x2m1({-1, 0, 1}), xm1({-1, 1}), x2p1({1, 0, 1});
    CHECK(poly_gcd(x2m1, xm1) == xm1);
    CHECK(poly_gcd(x2p1, x2m1) == QPoly::one());

    // gcd(x^4-1, x^6-1): oracle is the product of the shared cyclotomic
    // factors, i.e. those with index dividing gcd(4, 6) = 2.
    QPoly x4m1({-1, 0, 0, 0, 1}), x6m1({-1, 0, 0, 0, 0, 0, 1});
    QPoly oracle = cyclotomic(1) * cyclotomic(2);
    CHECK(oracle == QPoly({-1, 0, 1}));
    CHECK(poly_gcd(x4m1, x6m1) == oracle);
}

TEST_CASE("poly_gcd of zero") {
    QPoly p({2, 4});
    CHECK(poly_gcd(p, QPoly::zero()) == p.monic());
    CHECK(poly_gcd(QPoly::zero(), QPoly::zero()).is_zero());
}

TEST_CASE("squarefree_part examples") {
    QPoly a = QPoly({-1, 1}) * QPoly({-1, 1}) * QPoly({2, 1});  // (x-1)^2 (x+2)
    CHECK(squarefree_part(a) == QPoly({-1, 1}) * QPoly({2, 1}));
    CHECK(squarefree_part(QPoly({1, 0, 1})) == QPoly({1, 0, 1}));
    QPoly c = QPoly({-2, 0, 1});
    CHECK(squarefree_part(c * c * c) == c);
    CHECK_THROWS_AS(squarefree_part(QPoly::zero()), std::invalid_argument);
}

TEST_CASE("squarefree property: result has no repeated roots") {
    Lcg rng(7);
    for (int i = 0; i < 40; ++i) {
        QPoly p = rng.poly(6);
        if (p.degree() < 1) continue;
        QPoly s = squarefree_part(p);
        CHECK(poly_gcd(s, s.derivative()) == QPoly::one());
    }
}

TEST_CASE("gcd property: common factor is found") {
    Lcg rng(13);
    for (int i = 0; i < 30; ++i) {
        QPoly p = rng.poly(5), q = rng.poly(5), g = rng.poly(4);
        if (p.is_zero() || q.is_zero() || g.degree() < 1) continue;
        QPoly d = poly_gcd(p * g, q * g);
        CHECK((d % g.monic()).is_zero());
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(QPoly({-2, 1}), QPoly({-3, 1})) == Rational(-1));
    // res(x^2+1, x^2-1): product over the four root pairs is 4
    CHECK(resultant(QPoly({1, 0, 1}), QPoly({-1, 0, 1})) == Rational(4));
    CHECK(resultant(QPoly({-2, 0, 1}), QPoly({-2, 0, 1})) == Rational(0));
}

TEST_CASE("resultant agrees with Sylvester determinant") {
    Lcg rng(101);
    int done = 0;
    while (done < 25) {
        QPoly a = rng.poly(5), b = rng.poly(5);
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
        ++done;
    }
}

TEST_CASE("resultant sign symmetry") {
    Lcg rng(3);
    int done = 0;
    while (done < 25) {
        QPoly a = rng.poly(6), b = rng.poly(6);
        if (a.degree() < 1 || b.degree() < 1) continue;
        Rational lhs = resultant(a, b);
        Rational rhs = resultant(b, a);
        if ((static_cast<long>(a.degree()) * b.degree()) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("factor_over_q examples") {
    QPoly x4m1({-1, 0, 0, 0, 1});
    auto f = factor_over_q(x4m1);
    REQUIRE(f.size() == 3);
    CHECK(f[0].first == QPoly({-1, 1}));
    CHECK(f[0].second == 1);
    CHECK(f[1].first == QPoly({1, 1}));
    CHECK(f[2].first == QPoly({1, 0, 1}));

    // x^4+x^3+x^2+x+1 irreducible: oracle is a brute-force search for monic
    // integer factors of degree 1 and 2 with coefficients bounded by 6.
    QPoly phi5({1, 1, 1, 1, 1});
    bool has_small_factor = false;
    for (long a = -6; a <= 6 && !has_small_factor; ++a) {
        if ((phi5 % QPoly({Rational(a), Rational(1)})).is_zero()) has_small_factor = true;
        for (long b = -6; b <= 6 && !has_small_factor; ++b)
            if ((phi5 % QPoly({Rational(a), Rational(b), Rational(1)})).is_zero())
                has_small_factor = true;
    }
    CHECK_FALSE(has_small_factor);
    auto f5 = factor_over_q(phi5);
    REQUIRE(f5.size() == 1);
    CHECK(f5[0].first == phi5);
    CHECK(f5[0].second == 1);

    // x^6 - 2x^3 + 1 = (x^3-1)^2 = (x-1)^2 (x^2+x+1)^2
    QPoly sixth({1, 0, 0, -2, 0, 0, 1});
    CHECK(sixth == QPoly({-1, 0, 0, 1}) * QPoly({-1, 0, 0, 1}));
    auto f6 = factor_over_q(sixth);
    REQUIRE(f6.size() == 2);
    CHECK(f6[0].first == QPoly({-1, 1}));
    CHECK(f6[0].second == 2);
    CHECK(f6[1].first == QPoly({1, 1, 1}));
    CHECK(f6[1].second == 2);

    CHECK_THROWS_AS(factor_over_q(QPoly({3})), std::invalid_argument);
}

TEST_CASE("factor_over_q on cyclotomic products and larger inputs") {
    // x^12 - 1 has the cyclotomic factorization over Q
    std::vector<Rational> c(13, Rational(0));
    c[0] = -1;
    c[12] = 1;
    auto f = factor_over_q(QPoly(std::move(c)));
    REQUIRE(f.size() == 6);
    std::vector<QPoly> expect = {cyclotomic(1), cyclotomic(2),  cyclotomic(3),
                                 cyclotomic(4), cyclotomic(6), cyclotomic(12)};
    std::sort(expect.begin(), expect.end(), poly_less);
    for (size_t i = 0; i < 6; ++i) {
        CHECK(f[i].first == expect[i]);
        CHECK(f[i].second == 1);
    }
}

TEST_CASE("factor_over_q non-monic and rational input") {
    QPoly p = QPoly({1, 2}) * QPoly({-3, 2}) * QPoly({1, 0, 3});
    auto f = factor_over_q(p * make_rational(3, 7));
    QPoly prod = QPoly::one();
    for (const auto& [g, m] : f)
        for (int i = 0; i < m; ++i) prod = prod * g;
    CHECK(prod == p.monic());
    for (const auto& [g, m] : f) CHECK(g.is_monic());
}

TEST_CASE("factor_over_q re-multiplication property on random inputs") {
    Lcg rng(42);
    int done = 0;
    while (done < 15) {
        QPoly p = rng.poly(4) * rng.poly(4);
        if (p.degree() < 2) continue;
        auto f = factor_over_q(p);
        QPoly prod = QPoly::one();
        for (const auto& [g, m] : f)
            for (int i = 0; i < m; ++i) prod = prod * g;
        CHECK(prod == p.monic());
        ++done;
    }
}

TEST_CASE("cyclotomic and phi helpers") {
    CHECK(cyclotomic(1) == QPoly({-1, 1}));
    CHECK(cyclotomic(4) == QPoly({1, 0, 1}));
    CHECK(cyclotomic(5) == QPoly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic(12) == QPoly({1, 0, -1, 0, 1}));
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(13) == 12);
}

TEST_CASE("poly serialization strings") {
    CHECK(rational_to_string(make_rational(-2, 1)) == "-2/1");
    CHECK(rational_from_string("-2/1") == Rational(-2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK_THROWS_AS(rational_from_string("x/"), std::invalid_argument);
}

TEST_CASE("mpoly basics") {
    using MP = MPoly<Rational>;
    MP x = MP::variable(2, 0, Rational(1));
    MP y = MP::variable(2, 1, Rational(1));
    MP f = (x * x + y * y.scaled(Rational(-2)) * y) * x;  // x^3 - 2 x y^3
    CHECK(f.total_degree() == 4);
    MP g = x * x - y * y;
    auto val = g.eval<Rational>({Rational(3), Rational(2)}, Rational(0),
                                [](const Rational& c) { return c; });
    CHECK(val == 5);
    CHECK((x + y).pow(2, Rational(1)) == x * x + x * y.scaled(Rational(2)) + y * y);
}

TEST_CASE("linalg rank, nullspace, solve") {
    Matrix<Rational> m(2, 3, Rational(0));
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
    CHECK(matrix_rank(m) == 1);
    auto ns = nullspace(m, Rational(0), Rational(1));
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        Rational dot(0);
        for (size_t j = 0; j < 3; ++j) dot += m.at(0, j) * v[j];
        CHECK(dot == 0);
    }
    Matrix<Rational> a(2, 2, Rational(0));
    a.at(0, 0) = 1; a.at(0, 1) = 1; a.at(1, 0) = 1; a.at(1, 1) = -1;
    auto x = solve(a, {Rational(3), Rational(1)}, Rational(0));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    Matrix<Rational> bad(2, 1, Rational(1));
    CHECK_FALSE(solve(bad, {Rational(0), Rational(1)}, Rational(0)).has_value());
}
