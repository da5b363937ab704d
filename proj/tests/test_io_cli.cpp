#include <doctest.h>

#include "rhomax/json_io.hpp"
#include "rhomax/verify.hpp"

using namespace rhomax;

TEST_CASE("construction record serialization") {
    const Json j = to_json(family_a(1, 2, 0));
    CHECK(j.at("family") == "family_a");
    CHECK(j.at("params").at("n") == 1);
    CHECK(j.at("surface") == "F2");
    CHECK(j.at("census").at("D6") == 4);
    CHECK(j.at("census").at("D4") == 6);
    CHECK(j.at("invariants").at("h11") == 54);
    CHECK(j.at("rank_breakdown").at("census_rank") == 52);
    CHECK(j.at("rank_breakdown").at("independent_divisors") == 2);
    CHECK(j.at("maximal") == true);
    CHECK(j.at("building_data").contains("b3"));
}

TEST_CASE("certificate serialization carries the declared fields") {
    const Json j = to_json(construct_m76().certificate);
    for (const char* key :
         {"census_rank", "independent_divisors", "extra_rank", "lower_bound", "h11", "maximal"})
        CHECK(j.contains(key));
    CHECK(j.at("lower_bound") == 53);
    CHECK(j.at("extra_rank") == 3);
    CHECK(j.size() == 6);
}

TEST_CASE("big integers serialize as strings") {
    CHECK(json_int(Int(7)) == Json(7));
    const Int big("123456789012345678901234567890");
    CHECK(json_int(big) == Json("123456789012345678901234567890"));
}

TEST_CASE("arrangement dumps round trip") {
    const PlaneFixture fx = instantiate_m13();
    const Json dump = to_json(fx.arrangement, fx.partition);
    const ArrangementDump back = arrangement_from_json(dump);
    CHECK(verify_arrangement(back.arrangement).empty());
    CHECK(back.partition.size() == fx.partition.size());
    const auto before = derive_census(fx.arrangement, fx.partition);
    const auto after = derive_census(back.arrangement, back.partition);
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
        CHECK(before[i].point == after[i].point);
        CHECK(before[i].type == after[i].type);
        CHECK(before[i].rule == after[i].rule);
    }
    // emission is deterministic
    CHECK(dump.dump() == to_json(fx.arrangement, fx.partition).dump());
}

TEST_CASE("sweep serializations") {
    const auto rows = sweep(10);
    const std::string csv = sweep_to_csv(rows);
    CHECK(csv.rfind("chi,k2,admissible,in_region,family,n,m,k,h11\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == (long)rows.size() + 1);
    CHECK(csv.find("10,14,1,1,a,3,0,0,86") != std::string::npos);
    const Json j = sweep_to_json(rows);
    CHECK(j.size() == rows.size());
}

TEST_CASE("verdict and witness serialization") {
    const Json cov = to_json(horikawa_coverage(11, HorikawaLine::Odd));
    CHECK(cov.at("source") == "family_b");
    CHECK(cov.at("k2") == 17);
    CHECK(cov.at("params").at("m") == 3);
    const Json den = to_json(density_witness(Rat(9, 4)));
    CHECK(den.at("k2") == 99);
    CHECK(den.at("q") == "9/4");
    const Json germ = to_json(classify_germ(Germ::parse("y*(x^2 - 2*y^3)")));
    CHECK(germ.at("verdict") == "D5");
}

TEST_CASE("verification suite filtering") {
    const VerifyReport r = verify_paper("density");
    CHECK(r.checks.size() == 1);
    CHECK(r.checks[0].name == "density_witnesses");
    CHECK(r.checks[0].pass);
    CHECK_THROWS_AS(verify_paper("no_such_check"), Error);
}
