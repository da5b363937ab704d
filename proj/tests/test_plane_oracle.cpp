#include <doctest.h>

#include <random>

#include "rhomax/plane_oracle.hpp"

using namespace rhomax;

TEST_CASE("join and meet") {
    const ProjPoint p = ProjTriple::of_ints(0, 0, 1);
    const ProjPoint q = ProjTriple::of_ints(1, -1, 0);
    CHECK(join(p, q) == ProjTriple::of_ints(1, 1, 0));  // x + y = 0
    CHECK(meet(ProjTriple::of_ints(1, 1, 0), ProjTriple::of_ints(0, 1, 1)) ==
          ProjTriple::of_ints(1, -1, 1));
    CHECK_THROWS_AS(join(p, p), Error);
    CHECK_THROWS_AS(meet(ProjTriple::of_ints(1, 1, 0), ProjTriple::of_ints(2, 2, 0)), Error);
    CHECK_THROWS_AS(ProjTriple::of_ints(0, 0, 0), Error);
    // normalization is idempotent
    CHECK(ProjTriple::of_ints(2, 4, -6) == ProjTriple::of(Rat(1), Rat(2), Rat(-3)));
}

TEST_CASE("incidence algebra on random rational points") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> d(-8, 8);
    auto rnd_point = [&] {
        for (;;) {
            const long a = d(rng), b = d(rng), c = d(rng);
            if (a || b || c) return ProjTriple::of_ints(a, b, c);
        }
    };
    for (int t = 0; t < 100; ++t) {
        const ProjPoint p = rnd_point(), q = rnd_point();
        if (p == q) continue;
        const ProjLine l = join(p, q);
        CHECK(incident(p, l));
        CHECK(incident(q, l));
        const ProjPoint r = rnd_point();
        if (incident(r, l) || r == p) continue;
        const ProjLine l2 = join(p, r);
        CHECK(meet(l, l2) == p);
    }
}

TEST_CASE("contact orders on the fixtures") {
    const PlaneFixture fb = instantiate_family_b();
    const Arrangement& b = fb.arrangement;
    CHECK(contact_order(b.curve("C"), b.curve("l1"), b.point("P1")) == 2);
    CHECK(contact_order(b.curve("l2"), b.curve("l3"), b.point("P4")) == 1);
    CHECK(contact_order(b.curve("C"), b.curve("l1"), b.point("P4")) == 0);  // on neither

    const PlaneFixture fm = instantiate_m13();
    CHECK(contact_order(fm.arrangement.curve("C"), fm.arrangement.curve("lb"),
                        fm.arrangement.point("cusp")) == 3);
    CHECK(contact_order(fm.arrangement.curve("C"), fm.arrangement.curve("la"),
                        fm.arrangement.point("infl")) == 3);
    // a curve shares components with itself
    CHECK_THROWS_AS(contact_order(b.curve("C"), b.curve("C"), b.point("P1")), Error);
}

TEST_CASE("local germs classify the fixture singularities") {
    const PlaneFixture fa = instantiate_family_a();
    CHECK(classify_germ(local_germ(fa.arrangement, {"l1", "l2"}, fa.arrangement.point("P1"))) ==
          GermClass::ade(AdeType::A(1)));

    const PlaneFixture fm = instantiate_m13();
    CHECK(classify_germ(local_germ(fm.arrangement, {"C", "lb"}, fm.arrangement.point("cusp"))) ==
          GermClass::ade(AdeType::E(7)));
    CHECK(classify_germ(local_germ(fm.arrangement, {"C", "la"}, fm.arrangement.point("infl"))) ==
          GermClass::ade(AdeType::A(5)));
    CHECK(classify_germ(local_germ(fm.arrangement, {"C"}, fm.arrangement.point("cusp"))) ==
          GermClass::ade(AdeType::A(2)));

    // tangent line against the conic: a tacnode union
    const PlaneFixture fb = instantiate_family_b();
    CHECK(classify_germ(local_germ(fb.arrangement, {"C", "l1"}, fb.arrangement.point("P1"))) ==
          GermClass::ade(AdeType::A(3)));
    CHECK_THROWS_AS(local_germ(fb.arrangement, {"l2"}, fb.arrangement.point("P1")), Error);
}

TEST_CASE("the three fixtures verify") {
    CHECK(verify_arrangement(instantiate_family_a().arrangement).empty());
    CHECK(verify_arrangement(instantiate_family_b().arrangement).empty());
    CHECK(verify_arrangement(instantiate_m13().arrangement).empty());
}

TEST_CASE("forced degenerations are caught") {
    // moving l4 through P1 breaks general position: undeclared coincidences
    PlaneFixture fx = instantiate_family_a();
    fx.arrangement.curves.erase("l4");
    fx.arrangement.curves.emplace("l4", PlaneCurve::line(ProjTriple::of_ints(1, 1, 0)));
    CHECK(!verify_arrangement(fx.arrangement).empty());

    // collapsing the two tangency points of the second family
    PlaneFixture fb = instantiate_family_b();
    fb.arrangement.points["P3"] = fb.arrangement.point("P2");
    bool coincide = false;
    for (const auto& v : verify_arrangement(fb.arrangement))
        coincide = coincide || v.find("coincide") != std::string::npos;
    CHECK(coincide);

    // breaking a declared incidence
    PlaneFixture fm = instantiate_m13();
    fm.arrangement.points["P2"] = ProjTriple::of_ints(1, 2, 1);
    CHECK(!verify_arrangement(fm.arrangement).empty());
}

TEST_CASE("derive_census rejects germs outside the ADE range") {
    // the full family-A partition puts four concurrent fibers through Q
    const PlaneFixture fa = instantiate_family_a();
    CHECK_THROWS_AS(derive_census(fa.arrangement, fa.partition), Error);
    try {
        derive_census(fa.arrangement, fa.partition);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("Q") != std::string::npos);
    }
}

TEST_CASE("derive_census emits the m13 events") {
    const PlaneFixture fm = instantiate_m13();
    const auto events = derive_census(fm.arrangement, fm.partition);
    int disjoint = 0, smooth_pair = 0, cross = 0;
    for (const auto& e : events) {
        if (e.rule == TransportRule::Disjoint) ++disjoint;
        if (e.rule == TransportRule::SmoothPair) ++smooth_pair;
        if (e.rule == TransportRule::CrossNode) ++cross;
    }
    CHECK(disjoint == 3);
    CHECK(smooth_pair == 2);
    CHECK(cross == 7);
    const SingularityCensus c = bidouble_census(events);
    CHECK(c.count(AdeType::E(7)) == 2);
    CHECK(c.count(AdeType::A(5)) == 2);
    CHECK(c.count(AdeType::A(1)) == 4);
    CHECK(c.total_rank() == 28);
}
