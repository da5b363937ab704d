#include "rhomax/certify.hpp"

namespace rhomax {

std::size_t matrix_rank(const IntMat& m) { return bareiss_rank(m); }

Int rank_lower_bound(const SingularityCensus& census, const Int& independent_divisors,
                     const Int& extra_rank) {
    if (independent_divisors < 0 || extra_rank < 0)
        throw Error("parameter", "rank contributions must be nonnegative");
    return census.total_rank() + independent_divisors + extra_rank;
}

Certificate certify_maximal(const SingularityCensus& census, const Int& independent_divisors,
                            const Int& extra_rank, const Int& h11) {
    Certificate c{census.total_rank(), independent_divisors, extra_rank, 0, h11, false};
    c.lower_bound = rank_lower_bound(census, independent_divisors, extra_rank);
    if (c.lower_bound > h11)
        throw Error("data", "rank lower bound " + str(c.lower_bound) + " exceeds h11 = " + str(h11) +
                                "; census or invariants are inconsistent");
    c.maximal = (c.lower_bound == h11);
    return c;
}

}  // namespace rhomax
