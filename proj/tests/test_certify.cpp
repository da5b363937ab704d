#include <doctest.h>

#include "rhomax/certify.hpp"

using namespace rhomax;

namespace {

SingularityCensus family_a_120_census() {
    SingularityCensus c;
    c.add(AdeType::D(6), 4);
    c.add(AdeType::D(4), 6);
    c.add(AdeType::A(1), 4);
    return c;
}

}  // namespace

TEST_CASE("exact matrix rank") {
    CHECK(matrix_rank(IntMat{{-2, 1, 0}, {1, -1, 1}, {0, 1, -1}}) == 3);
    CHECK(matrix_rank(IntMat{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}) == 0);
    CHECK(matrix_rank(dynkin_matrix(AdeType::D(5))) == 5);
    CHECK(matrix_rank(IntMat{{1, 2, 3}, {2, 4, 6}}) == 1);
}

TEST_CASE("rank lower bounds") {
    CHECK(rank_lower_bound(family_a_120_census(), 2, 0) == 54);
    SingularityCensus m13;
    m13.add(AdeType::E(7), 2);
    m13.add(AdeType::A(5), 2);
    m13.add(AdeType::A(1), 4);
    CHECK(rank_lower_bound(m13, 1, 0) == 29);
    CHECK(rank_lower_bound(SingularityCensus{}, 2, 0) == 2);
    CHECK_THROWS_AS(rank_lower_bound(m13, -1, 0), Error);
}

TEST_CASE("maximality certificates") {
    const Certificate c = certify_maximal(family_a_120_census(), 2, 0, 54);
    CHECK(c.maximal);
    CHECK(c.lower_bound == 54);
    CHECK(c.census_rank == 52);

    // dropping a D4 leaves a valid, non-maximal certificate
    SingularityCensus fewer = family_a_120_census();
    SingularityCensus smaller;
    for (const auto& [t, n] : fewer.counts())
        smaller.add(t, t == AdeType::D(4) ? n - 1 : n);
    const Certificate weak = certify_maximal(smaller, 2, 0, 54);
    CHECK(!weak.maximal);
    CHECK(weak.lower_bound == 50);

    // a bound above h11 is an inconsistency, not a certificate
    CHECK_THROWS_AS(certify_maximal(family_a_120_census(), 2, 0, 53), Error);
}

TEST_CASE("block-diagonal cross check of the bound") {
    // assemble the full intersection matrix of the resolution curves plus the
    // pulled-back base classes and compare its rank with the structural sum
    const SingularityCensus census = [] {
        SingularityCensus c;
        c.add(AdeType::D(4), 6);
        c.add(AdeType::A(1), 2);
        c.add(AdeType::A(3), 3);
        return c;
    }();
    const Int bound = rank_lower_bound(census, 2, 0);
    std::vector<IntMat> blocks;
    for (const auto& [t, n] : census.counts())
        for (Int i = 0; i < n; ++i) blocks.push_back(dynkin_matrix(t));
    blocks.push_back(IntMat{{-1, 1}, {1, 0}});  // gram of (D0, F) on F_1
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.rows();
    IntMat big(total, total);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) big.at(at + i, at + j) = b.at(i, j);
        at += b.rows();
    }
    CHECK(Int(matrix_rank(big)) == bound);
}
