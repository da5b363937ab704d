#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhomax/certify.hpp"
#include "rhomax/covers.hpp"
#include "rhomax/plane_oracle.hpp"

namespace rhomax {

enum class Family { A, B };

std::string to_string(Family f);

// The (n, m, k) parameters of the two families, with their constraints:
//   family A: (n,m,k) != (1,0,0), m <= 2n+k != 0, m = k (mod 2)
//   family B: k <= m <= 2n+k != 0, k = m (mod 2)
struct FamilyParams {
    Family family = Family::A;
    long n = 0, m = 0, k = 0;

    void validate() const;  // throws naming the violated constraint
    long cover_degree() const { return 2 * n + k; }
};

SurfaceInvariants closed_form_invariants(const FamilyParams& p);
SingularityCensus closed_form_census(const FamilyParams& p);

// A fully assembled construction: building data, census, invariants, and the
// Picard-maximality certificate.
struct ConstructionRecord {
    std::string name;
    std::optional<FamilyParams> params;
    BuildingData data;
    SingularityCensus census;
    SurfaceInvariants invariants;
    Int independent_divisors;  // numerically independent divisors on the base
    IntMat extra_matrix;       // explicit extra intersection matrix, if any
    Int extra_rank;
    Certificate certificate;
};

ConstructionRecord family_a(long n, long m, long k);
ConstructionRecord family_b(long n, long m, long k);
ConstructionRecord construct(const FamilyParams& p);

// The two fixed constructions.
ConstructionRecord construct_m13();
ConstructionRecord construct_m76();

// Full transport pipeline for a family: verified plane arrangement ->
// blow-up bookkeeping -> cyclic cover -> branch partition -> bidouble rules.
// Every stage is audited against the Picard-lattice intersection numbers.
struct PipelineResult {
    std::vector<SingularEvent> events;
    SingularityCensus census;
};

PipelineResult census_pipeline(const FamilyParams& p);

// Enumerates the valid parameter triples with n, m, k <= bound.
std::vector<FamilyParams> parameter_grid(Family f, long bound);

}  // namespace rhomax
