#pragma once

#include <string>
#include <vector>

#include "rhomax/singularities.hpp"
#include "rhomax/surfaces.hpp"

namespace rhomax {

// Which of the three branch parts contain a point.
enum class Part : unsigned { B1 = 1, B2 = 2, B3 = 4 };

struct PartSet {
    unsigned bits = 0;

    static PartSet of(std::initializer_list<Part> parts);
    void insert(Part p) { bits |= (unsigned)p; }
    bool contains(Part p) const { return bits & (unsigned)p; }
    int size() const;
    bool operator==(const PartSet&) const = default;
    std::string text() const;
};

// A marked singular point of the branch configuration: where it sits, which
// parts pass through it, the ADE type of the local branch union, and the
// transport rule that consumes it.
struct SingularEvent {
    std::string point;
    PartSet membership;
    TransportRule rule = TransportRule::Disjoint;
    long parameter = 0;
    AdeType type = AdeType::A(1);   // type of the relevant local union
    bool on_branch_fiber = false;   // for the cyclic-cover stage
    bool transversal = true;        // branches transversal to the fiber
};

// Shape constraints: the bidouble rules need exactly two parts, Disjoint
// exactly one. Returns violation messages, empty when fine.
std::vector<std::string> validate_event(const SingularEvent& e);

// One labeled part of the branch divisor.
struct BranchPart {
    DivisorClass cls;
    std::vector<std::string> components;
};

// Z_2^2-cover building data {L_i, B_j} with configuration annotations.
struct BuildingData {
    BaseSurface surface;
    BranchPart b1, b2, b3;
    DivisorClass l1, l2, l3;
    std::vector<SingularEvent> annotations;

    DivisorClass branch_total() const { return b1.cls + b2.cls + b3.cls; }
};

// Checks the lattice identities 2L1 = B2+B3, 2L2 = B1+B3, L3 = L1+L2-B3,
// non-triviality of the L_i, and disjointness of component labels.
std::vector<std::string> validate_building_data(const BuildingData& bd);

// Invariants of the bidouble cover:
//   K^2 = (2K_Y + B1 + B2 + B3)^2
//   chi = 4 chi(O_Y) + (1/2) sum L_i (L_i + K_Y)     (must be integral)
//   p_g = p_g(Y) + sum h^0(K_Y + L_i)
//   q   = 1 + p_g - chi                              (must be >= 0)
SurfaceInvariants bidouble_invariants(const BuildingData& bd);

// True iff 2K_Y + B1 + B2 + B3 is ample, i.e. the cover has ample K_X.
bool half_canonical_ample(const BuildingData& bd);

// Pullback along the d-cyclic cover F_{de} -> F_e branched at two fibers.
struct CyclicPullback {
    DivisorClass cls;
    long components = 1;
};

// General classes a*D0 + b*F map to a*D0 + d*b*F upstairs. A branch fiber
// stays one reduced fiber; a non-branch fiber splits into d disjoint copies.
CyclicPullback cyclic_pullback(long e, long d, const DivisorClass& c, bool on_branch);

// Transports the singular events of the downstairs configuration through the
// d-cyclic cover: on-fiber transversal A_{2s-1} becomes A_{2ds-1}; off-fiber
// events split into d copies. Events that are singularities of a branch
// fiber itself do not belong here.
std::vector<SingularEvent> cyclic_census_transport(const std::vector<SingularEvent>& events,
                                                   long d);

// Selects the bidouble transport rule for a point on exactly two branch
// parts, from the part germ classes and the type of their union.
std::pair<TransportRule, long> bidouble_rule_two_parts(const std::string& point,
                                                            const GermClass& part_a,
                                                            const GermClass& part_b,
                                                            const AdeType& union_type);

}  // namespace rhomax
