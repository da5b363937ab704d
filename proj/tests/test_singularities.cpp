#include <doctest.h>

#include "rhomax/certify.hpp"
#include "rhomax/singularities.hpp"

using namespace rhomax;

TEST_CASE("ADE types and ranks") {
    CHECK(AdeType::A(3).rank() == 3);
    CHECK(AdeType::D(4).rank() == 4);
    CHECK(AdeType::E(7).rank() == 7);
    // D3 and A3 have the same Dynkin diagram
    CHECK(AdeType::D(3) == AdeType::A(3));
    CHECK(AdeType::D(3).label() == "A3");
    CHECK(AdeType::parse("D5") == AdeType::D(5));
    CHECK_THROWS_AS(AdeType::A(0), Error);
    CHECK_THROWS_AS(AdeType::D(2), Error);
    CHECK_THROWS_AS(AdeType::E(5), Error);
    CHECK_THROWS_AS(AdeType::parse("F4"), Error);
}

TEST_CASE("Dynkin matrices have full rank") {
    CHECK(dynkin_matrix(AdeType::A(1)) == IntMat{{-2}});
    const IntMat a3 = dynkin_matrix(AdeType::A(3));
    CHECK(a3 == IntMat{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
    const IntMat d4 = dynkin_matrix(AdeType::D(4));
    // star shape: three leaves on a central vertex
    CHECK(d4.at(1, 3) == 1);
    CHECK(d4.at(0, 3) == 0);
    for (long n = 1; n <= 9; ++n) CHECK(matrix_rank(dynkin_matrix(AdeType::A(n))) == (std::size_t)n);
    for (long n = 4; n <= 9; ++n) CHECK(matrix_rank(dynkin_matrix(AdeType::D(n))) == (std::size_t)n);
    for (long n : {6, 7, 8}) CHECK(matrix_rank(dynkin_matrix(AdeType::E(n))) == (std::size_t)n);
}

TEST_CASE("census bookkeeping") {
    SingularityCensus c;
    c.add(AdeType::D(6), 4);
    c.add(AdeType::D(4), 6);
    c.add(AdeType::A(1), 4);
    CHECK(c.total_rank() == 4 * 6 + 6 * 4 + 4);
    c.add(AdeType::D(3), 2);  // normalizes into A3
    CHECK(c.count(AdeType::A(3)) == 2);
    SingularityCensus other;
    other.add(AdeType::A(1), 1);
    other.merge(c);
    CHECK(other.count(AdeType::A(1)) == 5);
    CHECK_THROWS_AS(c.add(AdeType::A(1), -1), Error);
}

TEST_CASE("milnor numbers") {
    CHECK(milnor_number(Germ::parse("x^2 + y^4")).mu == 3);
    CHECK(milnor_number(Germ::parse("y*x^2 - 2*y^3")).mu == 4);
    CHECK(milnor_number(Germ::parse("x^2 + y^2")).mu == 1);
    CHECK(milnor_number(Germ::parse("x*y")).mu == 1);
    CHECK(!milnor_number(Germ::parse("x^2*y^2")).isolated);
    CHECK(!milnor_number(Germ::parse("x^2")).isolated);
    CHECK(milnor_number(Germ::parse("x + y^5")).mu == 0);  // smooth germ
    CHECK_THROWS_AS(Germ::parse("x^2 + 1"), Error);        // unit germ
    CHECK_THROWS_AS(Germ::parse("0"), Error);
}

TEST_CASE("milnor computation survives a degenerate modular reduction") {
    // with p = 3 the derivative 6x vanishes mod p and the modular pass never
    // stabilizes; the exact fallback still settles the dimension
    MilnorOptions opt;
    opt.prime = 3;
    const Germ g = Germ::parse("3*x^2 + y^4");
    CHECK(milnor_number(g, opt).mu == 3);
    CHECK(classify_germ(g, opt) == GermClass::ade(AdeType::A(3)));
}

TEST_CASE("rational coefficients are cleared before the lattice work") {
    CHECK(milnor_number(Germ::parse("1/2*x^2 + 1/3*y^3")).mu == 2);
    CHECK(classify_germ(Germ::parse("1/2*x^2 + 1/3*y^3")) == GermClass::ade(AdeType::A(2)));
}

TEST_CASE("classification of curve germs") {
    CHECK(classify_germ(Germ::parse("x^2 - y^2 - 2*y")) == GermClass::smooth());
    CHECK(classify_germ(Germ::parse("x^2 + y^2")) == GermClass::ade(AdeType::A(1)));
    CHECK(classify_germ(Germ::parse("x^2 - y^2 - 2*y^4")) == GermClass::ade(AdeType::A(1)));
    CHECK(classify_germ(Germ::parse("x^2 + y^3")) == GermClass::ade(AdeType::A(2)));
    CHECK(classify_germ(Germ::parse("y*(x^2 - 2*y^2)")) == GermClass::ade(AdeType::D(4)));
    CHECK(classify_germ(Germ::parse("y*(x^2 + y^2)")) == GermClass::ade(AdeType::D(4)));
    CHECK(classify_germ(Germ::parse("x^3 + y^4")) == GermClass::ade(AdeType::E(6)));
    CHECK(classify_germ(Germ::parse("x^3 + x*y^3")) == GermClass::ade(AdeType::E(7)));
    CHECK(classify_germ(Germ::parse("x^3 + y^5")) == GermClass::ade(AdeType::E(8)));
    CHECK(classify_germ(Germ::parse("x^4 + y^4")) == GermClass::not_ade());
    CHECK(classify_germ(Germ::parse("x^3 + y^7")) == GermClass::not_ade());
    CHECK(classify_germ(Germ::parse("x^2*y^2")) == GermClass::non_isolated());
}

TEST_CASE("double-point surface germs carry the curve label") {
    // the three local branch shapes of the cover analysis
    CHECK(classify_double_point_surface(Germ::parse("x^2 + 2*y^3")) == GermClass::ade(AdeType::A(2)));
    CHECK(classify_double_point_surface(Germ::parse("y*(x^2 - 2*y^3)")) ==
          GermClass::ade(AdeType::D(5)));
    CHECK(classify_double_point_surface(Germ::parse("x^2 + y^4")) == GermClass::ade(AdeType::A(3)));
}

TEST_CASE("classification is invariant under unimodular coordinate changes") {
    const struct {
        const char* text;
        GermClass want;
    } cases[] = {
        {"x^2 + y^5", GermClass::ade(AdeType::A(4))},
        {"y*(x^2 + y^3)", GermClass::ade(AdeType::D(5))},
        {"x^3 + y^4", GermClass::ade(AdeType::E(6))},
    };
    const Rat changes[][4] = {
        {1, 2, 0, 1}, {1, 0, -2, 1}, {Rat(1, 2), 0, 1, 2}, {2, 1, 1, 1}, {0, 1, -1, 0},
    };
    for (const auto& c : cases) {
        const Poly2 f = parse_poly2(c.text);
        for (const auto& ch : changes) {
            CHECK(classify_germ(Germ::of(f.linear_subst(ch[0], ch[1], ch[2], ch[3]))) == c.want);
        }
    }
}

TEST_CASE("transport rules") {
    auto single = [](const SingularityCensus& c, const AdeType& t) {
        return c.counts().size() == 1 && c.count(t) == 1;
    };
    CHECK(single(transport(TransportRule::CyclicOnFiber, AdeType::A(1), 3), AdeType::A(5)));
    CHECK(single(transport(TransportRule::CyclicOnFiber, AdeType::A(3), 2), AdeType::A(7)));
    CHECK_THROWS_AS(transport(TransportRule::CyclicOnFiber, AdeType::A(2), 3), Error);
    CHECK_THROWS_AS(transport(TransportRule::CyclicOnFiber, AdeType::D(4), 2), Error);
    CHECK(transport(TransportRule::CyclicOffFiber, AdeType::D(4), 2).count(AdeType::D(4)) == 2);
    CHECK(single(transport(TransportRule::FiberAugment, AdeType::A(3), 0), AdeType::D(6)));
    CHECK(single(transport(TransportRule::SmoothPair, AdeType::A(3), 0), AdeType::A(1)));
    CHECK_THROWS_AS(transport(TransportRule::SmoothPair, AdeType::A(1), 0), Error);
    CHECK(single(transport(TransportRule::NodePlusSmooth, AdeType::D(6), 0), AdeType::D(4)));
    // both D4 readings collapse to A3, matching the D3 normalization
    CHECK(single(transport(TransportRule::NodePlusSmooth, AdeType::D(4), 0), AdeType::A(3)));
    CHECK(single(transport(TransportRule::SingularPlusSmooth, AdeType::D(4), 0), AdeType::A(3)));
    CHECK(single(transport(TransportRule::SingularPlusSmooth, AdeType::D(10), 0), AdeType::A(15)));
    CHECK(transport(TransportRule::CrossNode, AdeType::A(1), 0).counts().empty());
    CHECK_THROWS_AS(transport(TransportRule::CrossNode, AdeType::A(3), 0), Error);
    CHECK(transport(TransportRule::Disjoint, AdeType::E(7), 0).count(AdeType::E(7)) == 2);
}

TEST_CASE("cover germs built from branch equations classify consistently") {
    // two smooth branches b1 = x - y^{n+1}, b2 = x + y^{n+1} meeting in
    // A_{2n+1}: eliminating x from w^2 = b1 turns the cover equation into
    // z^2 = b2(w^2 + y^{n+1}, y), whose double-point type must be A_n —
    // the same answer the transport rule gives
    auto subst_x = [](const Poly2& f, const Poly2& repl) {
        Poly2 out;
        for (const auto& [mon, c] : f.terms()) {
            Poly2 t(c);
            for (int i = 0; i < mon.i; ++i) t = t * repl;
            out += t * Poly2::mono(0, mon.j, 1);
        }
        return out;
    };
    const Poly2 x = Poly2::var_x(), y = Poly2::var_y();
    for (long n = 1; n <= 6; ++n) {
        Poly2 ypow{Rat(1)};
        for (long i = 0; i < n + 1; ++i) ypow = ypow * y;
        const Poly2 b1 = x - ypow, b2 = x + ypow;
        const Poly2 branch_union = b1 * b2;
        CHECK(classify_germ(Germ::of(branch_union)) == GermClass::ade(AdeType::A(2 * n + 1)));
        const Poly2 cover = subst_x(b2, x * x + ypow);  // w^2 + 2 y^{n+1}
        CHECK(classify_double_point_surface(Germ::of(cover)) == GermClass::ade(AdeType::A(n)));
        CHECK(transport(TransportRule::SmoothPair, AdeType::A(2 * n + 1)).count(AdeType::A(n)) == 1);
    }
}

TEST_CASE("milnor numbers equal Dynkin indices on the normal forms") {
    for (long n = 1; n <= 8; ++n)
        CHECK(milnor_number(Germ::of(parse_poly2("x^2") + parse_poly2("y^" + std::to_string(n + 1))))
                  .mu == n);
    for (long n = 4; n <= 8; ++n)
        CHECK(milnor_number(
                  Germ::of(parse_poly2("y*(x^2 + y^" + std::to_string(n - 2) + ")")))
                  .mu == n);
}

TEST_CASE("milnor numbers agree with the intersection multiplicity of the partials") {
    // two fully independent routes: truncated linear algebra with Nakayama
    // stabilization vs Euclidean reduction of the gradient pair
    const char* germs[] = {
        "x^2 + y^5",         "y*(x^2 + y^4)",   "x^3 + y^4",        "x^3 + x*y^3",
        "x^3 + y^5",         "x^2 - y^2 - 2*y^4", "x^4 + y^4",      "x^4 + x*y^3 + y^5",
        "x^2*y + x*y^3 + y^7",
    };
    for (const char* s : germs) {
        const Poly2 f = parse_poly2(s);
        const MilnorResult mr = milnor_number(Germ::of(f));
        REQUIRE(mr.isolated);
        const auto im = local_intersection_multiplicity(f.dx(), f.dy());
        REQUIRE(im.has_value());
        CHECK(mr.mu == *im);
    }
    // and the routes agree on non-isolatedness
    const Poly2 g = parse_poly2("x^2*y^2");
    CHECK(!milnor_number(Germ::of(g)).isolated);
    CHECK(!local_intersection_multiplicity(g.dx(), g.dy()).has_value());
}
