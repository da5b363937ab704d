#pragma once

#include "rhomax/linalg.hpp"
#include "rhomax/numeric.hpp"
#include "rhomax/singularities.hpp"

namespace rhomax {

// Picard-number lower-bound certificate: the resolution (-2)-curves of the
// census, pullbacks of independent divisors on the base, and any explicit
// extra exceptional configuration give numerically independent classes, so
//   rho >= census_rank + independent_divisors + extra_rank,
// and equality with h11 certifies maximality.
struct Certificate {
    Int census_rank;
    Int independent_divisors;
    Int extra_rank;
    Int lower_bound;
    Int h11;
    bool maximal = false;

    bool operator==(const Certificate&) const = default;
};

// Exact rank by fraction-free elimination.
std::size_t matrix_rank(const IntMat& m);

Int rank_lower_bound(const SingularityCensus& census, const Int& independent_divisors,
                     const Int& extra_rank);

// Builds the certificate; a lower bound exceeding h11 is an inconsistency
// (rho <= h11 always) and raises.
Certificate certify_maximal(const SingularityCensus& census, const Int& independent_divisors,
                            const Int& extra_rank, const Int& h11);

}  // namespace rhomax
