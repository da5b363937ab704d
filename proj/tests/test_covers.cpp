#include <doctest.h>

#include <random>

#include "rhomax/covers.hpp"

using namespace rhomax;

namespace {

// the building data of the quintic-plus-tangents cover of the plane
BuildingData m13_data() {
    BuildingData bd;
    bd.surface = BaseSurface::plane();
    bd.b1 = {plane_class(5), {"C", "la", "lb"}};
    bd.b2 = {plane_class(1), {"t2"}};
    bd.b3 = {plane_class(1), {"t3"}};
    bd.l1 = plane_class(1);
    bd.l2 = plane_class(3);
    bd.l3 = plane_class(3);
    return bd;
}

}  // namespace

TEST_CASE("building data identities") {
    CHECK(validate_building_data(m13_data()).empty());

    BuildingData bad = m13_data();
    bad.b3.cls = plane_class(2);
    const auto v = validate_building_data(bad);
    REQUIRE(!v.empty());
    CHECK(v[0] == "2L1 != B2 + B3");

    BuildingData dup = m13_data();
    dup.b2.components = {"C"};
    bool found = false;
    for (const auto& msg : validate_building_data(dup))
        found = found || msg.find("appears in two branch parts") != std::string::npos;
    CHECK(found);

    BuildingData mixed = m13_data();
    mixed.l1 = hirzebruch_class(1, 1, 1);
    CHECK(!validate_building_data(mixed).empty());
}

TEST_CASE("cover invariants from the building data") {
    const SurfaceInvariants inv = bidouble_invariants(m13_data());
    CHECK(inv == SurfaceInvariants(1, 3, 2, 0, 29));

    // first family at (1,2,0) on F_2
    BuildingData fa;
    fa.surface = BaseSurface::hirzebruch(2);
    fa.b1 = {hirzebruch_class(2, 1, 0), {"D0"}};
    fa.b2 = {hirzebruch_class(2, 1, 2), {"l4"}};
    fa.b3 = {hirzebruch_class(2, 3, 10), {"l1", "l2", "l3", "l5", "l6", "l8#1", "l8#2"}};
    fa.l1 = hirzebruch_class(2, 2, 6);
    fa.l2 = hirzebruch_class(2, 2, 5);
    fa.l3 = hirzebruch_class(2, 1, 1);
    CHECK(validate_building_data(fa).empty());
    CHECK(bidouble_invariants(fa) == SurfaceInvariants(6, 6, 5, 0, 54));
    CHECK(half_canonical_ample(fa));
}

TEST_CASE("half-canonical ampleness of degenerate data") {
    BuildingData bd;
    bd.surface = BaseSurface::plane();
    bd.b1 = {plane_class(0), {}};
    bd.b2 = {plane_class(0), {}};
    bd.b3 = {plane_class(0), {}};
    bd.l1 = plane_class(0);
    bd.l2 = plane_class(0);
    bd.l3 = plane_class(0);
    CHECK(!half_canonical_ample(bd));  // 2K_Y is anti-ample
}

TEST_CASE("cyclic pullback of divisor classes") {
    // sections pick up the degree on the fiber coefficient
    CHECK(cyclic_pullback(1, 2, hirzebruch_class(1, 1, 1), false).cls == hirzebruch_class(2, 1, 2));
    const CyclicPullback branch = cyclic_pullback(1, 3, hirzebruch_class(1, 0, 1), true);
    CHECK(branch.cls == hirzebruch_class(3, 0, 1));
    CHECK(branch.components == 1);
    const CyclicPullback split = cyclic_pullback(1, 3, hirzebruch_class(1, 0, 1), false);
    CHECK(split.cls == hirzebruch_class(3, 0, 3));
    CHECK(split.components == 3);
    CHECK_THROWS_AS(cyclic_pullback(1, 0, hirzebruch_class(1, 0, 1), false), Error);
    CHECK_THROWS_AS(cyclic_pullback(1, 2, hirzebruch_class(1, 1, 1), true), Error);
    CHECK_THROWS_AS(cyclic_pullback(1, 2, plane_class(1), false), Error);
}

TEST_CASE("pullback scales intersection numbers by the cover degree") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-5, 5);
    for (long e = 1; e <= 3; ++e)
        for (long deg = 1; deg <= 4; ++deg)
            for (int t = 0; t < 25; ++t) {
                const DivisorClass c1 = hirzebruch_class(e, d(rng), d(rng));
                const DivisorClass c2 = hirzebruch_class(e, d(rng), d(rng));
                const DivisorClass u1 = cyclic_pullback(e, deg, c1, false).cls;
                const DivisorClass u2 = cyclic_pullback(e, deg, c2, false).cls;
                CHECK(intersect(u1, u2) == deg * intersect(c1, c2));
            }
}

TEST_CASE("cyclic transport of singular events") {
    SingularEvent on;
    on.point = "P1";
    on.membership = PartSet::of({Part::B3});
    on.type = AdeType::A(1);
    on.on_branch_fiber = true;

    auto out = cyclic_census_transport({on}, 4);
    REQUIRE(out.size() == 1);
    CHECK(out[0].type == AdeType::A(7));
    CHECK(out[0].rule == TransportRule::CyclicOnFiber);

    SingularEvent off;
    off.point = "P3";
    off.membership = PartSet::of({Part::B3});
    off.type = AdeType::D(4);
    auto copies = cyclic_census_transport({off}, 2);
    REQUIRE(copies.size() == 2);
    CHECK(copies[0].point == "P3#1");
    CHECK(copies[1].point == "P3#2");
    CHECK(copies[0].type == AdeType::D(4));

    SingularEvent even = on;
    even.type = AdeType::A(2);
    CHECK_THROWS_AS(cyclic_census_transport({even}, 3), Error);
    SingularEvent tangent = on;
    tangent.transversal = false;
    CHECK_THROWS_AS(cyclic_census_transport({tangent}, 3), Error);
}

TEST_CASE("bidouble rule selection by local shape") {
    const GermClass smooth = GermClass::smooth();
    const GermClass node = GermClass::ade(AdeType::A(1));
    CHECK(bidouble_rule_two_parts("p", smooth, smooth, AdeType::A(1)) ==
          std::pair{TransportRule::CrossNode, 0L});
    CHECK(bidouble_rule_two_parts("p", smooth, smooth, AdeType::A(3)) ==
          std::pair{TransportRule::SmoothPair, 1L});
    CHECK(bidouble_rule_two_parts("p", node, smooth, AdeType::D(6)) ==
          std::pair{TransportRule::NodePlusSmooth, 1L});
    CHECK(bidouble_rule_two_parts("p", smooth, GermClass::ade(AdeType::A(7)), AdeType::D(10)) ==
          std::pair{TransportRule::SingularPlusSmooth, 7L});
    CHECK_THROWS_AS(bidouble_rule_two_parts("p", smooth, smooth, AdeType::A(2)), Error);
    CHECK_THROWS_AS(bidouble_rule_two_parts("p", node, node, AdeType::D(4)), Error);
    CHECK_THROWS_AS(bidouble_rule_two_parts("p", node, smooth, AdeType::A(3)), Error);
}

TEST_CASE("event shape validation") {
    SingularEvent e;
    e.point = "p";
    e.membership = PartSet::of({Part::B1});
    e.rule = TransportRule::SmoothPair;
    e.type = AdeType::A(3);
    CHECK(!validate_event(e).empty());  // needs two parts
    e.membership = PartSet::of({Part::B1, Part::B2});
    CHECK(validate_event(e).empty());
    e.rule = TransportRule::Disjoint;
    CHECK(!validate_event(e).empty());  // needs one part
}
