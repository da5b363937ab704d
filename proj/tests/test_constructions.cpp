#include <doctest.h>

#include "rhomax/constructions.hpp"

using namespace rhomax;

TEST_CASE("parameter constraints") {
    CHECK_THROWS_AS(family_a(1, 0, 0), Error);  // the excluded triple
    CHECK_THROWS_AS(family_a(0, 0, 0), Error);  // 2n+k = 0
    CHECK_THROWS_AS(family_a(2, 1, 0), Error);  // parity
    CHECK_THROWS_AS(family_a(1, 5, 1), Error);  // m > 2n+k
    CHECK_THROWS_AS(family_b(1, 0, 1), Error);  // k > m
    try {
        family_a(2, 1, 0);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("parity") != std::string::npos);
    }
    CHECK_NOTHROW(family_b(1, 0, 0));
}

TEST_CASE("family A at (1,2,0)") {
    const ConstructionRecord r = family_a(1, 2, 0);
    CHECK(r.invariants == SurfaceInvariants(6, 6, 5, 0, 54));
    CHECK(r.census.count(AdeType::D(6)) == 4);
    CHECK(r.census.count(AdeType::D(4)) == 6);
    CHECK(r.census.count(AdeType::A(1)) == 4);
    CHECK(r.census.total_rank() == 52);
    CHECK(r.certificate.maximal);
    CHECK(r.certificate.lower_bound == 54);
    CHECK(r.data.surface == BaseSurface::hirzebruch(2));
}

TEST_CASE("family A at (0,1,1): the D3 normalization case") {
    const ConstructionRecord r = family_a(0, 1, 1);
    CHECK(r.invariants.k2 == 3);
    CHECK(r.invariants.chi == 4);
    CHECK(r.invariants.h11 == 37);
    CHECK(r.census.count(AdeType::D(4)) == 6);
    CHECK(r.census.count(AdeType::A(3)) == 3);
    CHECK(r.census.count(AdeType::A(1)) == 2);
    CHECK(r.census.total_rank() == 35);
    CHECK(r.certificate.maximal);
}

TEST_CASE("family B at (1,0,0)") {
    const ConstructionRecord r = family_b(1, 0, 0);
    CHECK(r.invariants == SurfaceInvariants(6, 6, 5, 0, 54));
    CHECK(r.census.count(AdeType::D(10)) == 4);
    CHECK(r.census.count(AdeType::A(1)) == 8);
    CHECK(r.census.count(AdeType::D(4)) == 1);
    CHECK(r.census.total_rank() == 52);
    CHECK(r.certificate.maximal);
}

TEST_CASE("family B at (4,4,0)") {
    const ConstructionRecord r = family_b(4, 4, 0);
    CHECK(r.invariants.k2 == 44);
    CHECK(r.invariants.chi == 25);
    CHECK(r.certificate.maximal);
}

TEST_CASE("census pipeline reproduces the intermediate censuses") {
    // at (1,2,0): the on-fiber node becomes A3, then the added fiber makes D6
    const PipelineResult pr = census_pipeline({Family::A, 1, 2, 0});
    SingularityCensus b3_internal, cross_parts;
    for (const auto& e : pr.events) {
        if (e.rule == TransportRule::CrossNode) continue;
        if (e.membership == PartSet::of({Part::B3}))
            b3_internal.add(e.type);
        else if (e.membership.size() == 2)
            cross_parts.add(e.type);
    }
    // branch-part census: two D6 from the tangency fibers, m = 2 copies of
    // D4, and m = 2 plain nodes against the split fibers
    CHECK(b3_internal.count(AdeType::D(6)) == 2);
    CHECK(b3_internal.count(AdeType::D(4)) == 2);
    CHECK(b3_internal.count(AdeType::A(1)) == 2);
    // cross-part census: the two D6 unions that descend to D4
    CHECK(cross_parts.count(AdeType::D(6)) == 2);

    const PipelineResult pb = census_pipeline({Family::B, 1, 0, 0});
    bool d10 = false;
    for (const auto& e : pb.events)
        d10 = d10 || (e.point == "P1" && e.type == AdeType::D(10));
    CHECK(d10);
}

TEST_CASE("pipeline census equals the closed form on a sample grid") {
    for (const auto& p : parameter_grid(Family::A, 3))
        CHECK(census_pipeline(p).census == closed_form_census(p));
    for (const auto& p : parameter_grid(Family::B, 3))
        CHECK(census_pipeline(p).census == closed_form_census(p));
}

TEST_CASE("census rank identity across the grids") {
    for (Family f : {Family::A, Family::B})
        for (const auto& p : parameter_grid(f, 4)) {
            const SingularityCensus c = closed_form_census(p);
            CHECK(c.total_rank() + 2 == closed_form_invariants(p).h11);
        }
}

TEST_CASE("every grid record is maximal with q = 0") {
    for (Family f : {Family::A, Family::B})
        for (const auto& p : parameter_grid(f, 3)) {
            const ConstructionRecord r = construct(p);
            CHECK(r.invariants.q == 0);
            CHECK(r.certificate.maximal);
            CHECK(validate_building_data(r.data).empty());
        }
}

TEST_CASE("the quintic-with-tangents cover") {
    const ConstructionRecord r = construct_m13();
    CHECK(r.invariants == SurfaceInvariants(1, 3, 2, 0, 29));
    CHECK(r.census.total_rank() == 28);
    CHECK(r.independent_divisors == 1);
    CHECK(r.certificate.lower_bound == 29);
    CHECK(r.certificate.maximal);
    // the coordinate oracle provided the annotations
    CHECK(!r.data.annotations.empty());
}

TEST_CASE("the tri-conical cover") {
    const ConstructionRecord r = construct_m76();
    CHECK(r.invariants == SurfaceInvariants(7, 6, 5, 0, 53));
    CHECK(r.census.count(AdeType::A(15)) == 2);
    CHECK(r.census.count(AdeType::A(3)) == 4);
    CHECK(r.census.count(AdeType::A(1)) == 8);
    CHECK(r.census.total_rank() == 50);
    CHECK(r.extra_rank == 3);
    CHECK(r.independent_divisors == 0);
    CHECK(r.certificate.lower_bound == 53);
    CHECK(r.certificate.maximal);
    CHECK(r.data.surface == BaseSurface::blownup_f1());
}
