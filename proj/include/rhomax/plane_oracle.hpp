#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rhomax/covers.hpp"
#include "rhomax/poly.hpp"
#include "rhomax/singularities.hpp"

namespace rhomax {

// Homogeneous rational triple, normalized so the first nonzero coordinate
// is 1. Equality is equality of representatives.
struct ProjTriple {
    std::array<Rat, 3> v;

    static ProjTriple of(const Rat& a, const Rat& b, const Rat& c);
    static ProjTriple of_ints(long a, long b, long c);
    bool operator==(const ProjTriple&) const = default;
    auto operator<=>(const ProjTriple&) const = default;
    std::string text() const;
};

using ProjPoint = ProjTriple;
using ProjLine = ProjTriple;  // coefficient triple of a X0 + b X1 + c X2

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);
bool incident(const ProjPoint& p, const ProjLine& l);

struct PlaneCurve {
    Poly3 f;
    long degree = 0;

    static PlaneCurve of(Poly3 f);
    static PlaneCurve line(const ProjLine& l);
    bool passes_through(const ProjPoint& p) const { return f.eval(p.v) == 0; }
};

// Labeled curves and points with the declared incidence/tangency facts and
// the genericity blacklist, all checkable by exact computation.
struct Arrangement {
    std::map<std::string, PlaneCurve> curves;
    std::map<std::string, ProjPoint> points;

    struct Contact {
        std::string c1, c2, point;
        Int order;
    };
    std::vector<std::pair<std::string, std::string>> on;    // (point, curve)
    std::vector<std::pair<std::string, std::string>> off;   // declared non-incidences
    std::vector<Contact> contacts;

    // complete singular census of a single component curve (degree >= 3)
    std::map<std::string, std::vector<std::pair<std::string, AdeType>>> component_singular;

    const PlaneCurve& curve(const std::string& label) const;
    const ProjPoint& point(const std::string& label) const;
    std::vector<std::string> curves_through(const ProjPoint& p) const;
};

// Local intersection multiplicity of two curves at a point; 0 when the point
// is off either curve, error if they share a component through it.
Int contact_order(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPoint& p);

// Product of the selected curves, in an affine chart centered at p.
Germ local_germ(const Arrangement& a, const std::vector<std::string>& labels, const ProjPoint& p);

// Every declared fact re-derived by exact computation, plus structural
// audits: points pairwise distinct, curves squarefree and pairwise coprime,
// pairwise intersections Bezout-complete against the declared points, and
// component singular censuses certified complete.
std::vector<std::string> verify_arrangement(const Arrangement& a);

using BranchAssignment = std::map<std::string, Part>;

// Singular events of the branch configuration: for every declared point on
// at least one assigned curve, classify the per-part and union germs and
// emit the event with its transport rule.
std::vector<SingularEvent> derive_census(const Arrangement& a, const BranchAssignment& partition);

// Census the bidouble cover sees, from the emitted events.
SingularityCensus bidouble_census(const std::vector<SingularEvent>& events);

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

// Plane fixture with the metadata the construction pipeline needs.
struct PlaneFixture {
    Arrangement arrangement;
    BranchAssignment partition;          // every configuration curve
    BranchAssignment section_partition;  // non-fiber curves only (the P^2-level census view)
    std::string blowup_point;                       // point blown up to make F_1
    std::vector<std::string> branch_fibers;         // cyclic branch fibers
    std::vector<std::string> split_fibers;          // fibers that split upstairs
    // class on F_1 after the blow-up, per curve, in the (D0, F) basis
    std::map<std::string, std::pair<Int, Int>> f1_class;
};

PlaneFixture instantiate_family_a();
PlaneFixture instantiate_family_b();
PlaneFixture instantiate_m13();

}  // namespace rhomax
