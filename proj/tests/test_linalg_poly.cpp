#include <doctest.h>

#include <random>

#include "rhomax/linalg.hpp"
#include "rhomax/poly.hpp"

using namespace rhomax;

namespace {

// independent oracle: plain Gaussian elimination over Q
std::size_t rational_gauss_rank(const IntMat& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rat(m.at(i, j));
    std::size_t rank = 0, r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            const Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

IntMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int span) {
    std::uniform_int_distribution<int> d(-span, span);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("bareiss rank agrees with the rational elimination oracle") {
    std::mt19937_64 rng(20240801);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMat m = random_matrix(rng, dim(rng), dim(rng), 4);
        const std::size_t want = rational_gauss_rank(m);
        CHECK(bareiss_rank(m) == want);
        CHECK(stripped_rank(m) == want);
    }
}

TEST_CASE("rank of outer products") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    IntMat m(5, 5);
    std::vector<Int> u(5), v(5);
    for (auto& x : u) x = d(rng);
    for (auto& x : v) x = d(rng);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = u[i] * v[j];
    CHECK(bareiss_rank(m) <= 1);
    CHECK(stripped_rank(m) == bareiss_rank(m));
}

TEST_CASE("mod-p rank never exceeds the rational rank") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMat m = random_matrix(rng, 5, 6, 6);
        CHECK(rank_mod_p(m, 2147483629u) <= bareiss_rank(m));
    }
}

TEST_CASE("germ text parsing") {
    const Poly2 p = parse_poly2("x^2 - 2*y^3 + 1/2*x*y");
    CHECK(p.coeff(2, 0) == 1);
    CHECK(p.coeff(0, 3) == -2);
    CHECK(p.coeff(1, 1) == Rat(1, 2));
    CHECK(parse_poly2("y*(x^2 - 2*y^3)") == parse_poly2("x^2*y - 2*y^4"));
    CHECK(parse_poly2("(x+y)^2") == parse_poly2("x^2 + 2*x*y + y^2"));
    CHECK(parse_poly2("2x") == parse_poly2("2*x"));
    CHECK_THROWS_AS(parse_poly2("x +"), Error);
    CHECK_THROWS_AS(parse_poly2("1/0"), Error);
    CHECK_THROWS_AS(parse_poly2("x^2 )"), Error);
}

TEST_CASE("polynomial text rendering round trips") {
    for (const char* s : {"x^2 - 2*y^3 + 1/2*x*y", "y*(x^2-2*y^2)", "x", "3/4"}) {
        const Poly2 p = parse_poly2(s);
        CHECK(parse_poly2(p.text()) == p);
    }
}

TEST_CASE("bivariate gcd finds shared factors") {
    const Poly2 x = Poly2::var_x(), y = Poly2::var_y();
    const Poly2 f = (x + y) * (x + y) * (x - y);
    const Poly2 g = (x + y) * x * x;
    CHECK(gcd2(f, g).degree() == 1);
    CHECK(gcd2(x * x + y, y).degree() == 0);
}

TEST_CASE("local intersection multiplicity") {
    const Poly2 x = Poly2::var_x(), y = Poly2::var_y();
    CHECK(local_intersection_multiplicity(x, y) == Int(1));
    // tangent line to a parabola
    CHECK(local_intersection_multiplicity(y - x * x, y) == Int(2));
    // cusp against its tangent
    CHECK(local_intersection_multiplicity(y * y - x * x * x, y) == Int(3));
    // transversal smooth branches with a unit factor
    CHECK(local_intersection_multiplicity(x + y + x * y, (x - y) * (Poly2(Rat(1)) + x)) == Int(1));
    // a point off one curve contributes nothing
    CHECK(local_intersection_multiplicity(x, y + Poly2(Rat(1))) == Int(0));
    // shared branch through the origin
    CHECK(!local_intersection_multiplicity((x + y) * x, (x + y) * y).has_value());
}

TEST_CASE("intersection multiplicity is symmetric and additive over products") {
    const Poly2 x = Poly2::var_x(), y = Poly2::var_y();
    const Poly2 a = y - x * x, b = y + x * x, c = x - y;
    const auto m1 = local_intersection_multiplicity(a * b, c);
    const auto m2 = local_intersection_multiplicity(c, a * b);
    REQUIRE(m1.has_value());
    CHECK(*m1 == *m2);
    CHECK(*m1 == *local_intersection_multiplicity(a, c) + *local_intersection_multiplicity(b, c));
}

TEST_CASE("linear substitution is multiplicative and degree preserving") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    const Poly2 f = parse_poly2("x^3 - 2*x*y + y^2");
    const Poly2 g = parse_poly2("x + y^2");
    for (int t = 0; t < 20; ++t) {
        Rat a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (a * e - b * c == 0) continue;
        CHECK((f * g).linear_subst(a, b, c, e) ==
              f.linear_subst(a, b, c, e) * g.linear_subst(a, b, c, e));
        CHECK(f.linear_subst(a, b, c, e).degree() == f.degree());
    }
}
