#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rhomax/linalg.hpp"
#include "rhomax/numeric.hpp"
#include "rhomax/poly.hpp"

namespace rhomax {

// ---------------------------------------------------------------------------
// ADE types and censuses
// ---------------------------------------------------------------------------

// An ADE (du Val) type. D3 is normalized to A3 at construction; the two have
// the same Dynkin diagram and resolution lattice.
struct AdeType {
    char letter = 'A';     // 'A', 'D', 'E'
    long index = 1;   // Dynkin rank

    static AdeType A(long n);
    static AdeType D(long n);
    static AdeType E(long n);
    static AdeType make(char letter, long index);
    static AdeType parse(const std::string& label);  // "A3", "D5", "E7"

    long rank() const { return index; }
    std::string label() const { return std::string(1, letter) + std::to_string(index); }
    auto operator<=>(const AdeType&) const = default;
};

// Intersection matrix of the (-2)-curve configuration of the minimal
// resolution: -2 on the diagonal, 1 for adjacent Dynkin vertices.
IntMat dynkin_matrix(const AdeType& t);

// Multiset of ADE types with multiplicities.
class SingularityCensus {
  public:
    SingularityCensus() = default;

    void add(const AdeType& t, const Int& count = 1);
    void merge(const SingularityCensus& o);
    const std::map<AdeType, Int>& counts() const { return counts_; }
    Int count(const AdeType& t) const;
    Int total_rank() const;
    bool operator==(const SingularityCensus&) const = default;
    std::string text() const;

  private:
    std::map<AdeType, Int> counts_;
};

// ---------------------------------------------------------------------------
// Curve germs and their classification
// ---------------------------------------------------------------------------

// A bivariate polynomial viewed as a curve germ at the origin.
struct Germ {
    Poly2 poly;
    static Germ of(Poly2 p);               // requires p(0,0) == 0, p != 0
    static Germ parse(const std::string&); // germ text format
};

struct GermClass {
    enum class Kind { Smooth, Ade, NonIsolated, NotAde };
    Kind kind = Kind::NotAde;
    std::optional<AdeType> type;  // set iff kind == Ade

    static GermClass smooth() { return {Kind::Smooth, std::nullopt}; }
    static GermClass ade(AdeType t) { return {Kind::Ade, t}; }
    static GermClass non_isolated() { return {Kind::NonIsolated, std::nullopt}; }
    static GermClass not_ade() { return {Kind::NotAde, std::nullopt}; }

    bool is(Kind k) const { return kind == k; }
    bool operator==(const GermClass&) const = default;
    std::string label() const;
};

struct MilnorOptions {
    // NonIsolated is reported when the local-algebra dimension has not
    // stabilized by this truncation degree (0: use 2*deg^2).
    int degree_bound = 0;
    std::uint32_t prime = 2147483629u;
};

// Global default, overridable through the CLI config file.
MilnorOptions& milnor_defaults();

struct MilnorResult {
    bool isolated = false;
    Int mu = 0;  // meaningful when isolated
};

// dim_Q Q[[x,y]] / (g_x, g_y), by bounded-degree linear algebra with
// Nakayama-stabilization detection. Unit germs are rejected.
MilnorResult milnor_number(const Germ& g, const MilnorOptions& opt = milnor_defaults());

GermClass classify_germ(const Germ& g, const MilnorOptions& opt = milnor_defaults());

// Same classification, read as the type of the double-point surface germ
// z^2 = g(x, y); an ADE curve germ and its double cover carry the same label.
GermClass classify_double_point_surface(const Germ& g, const MilnorOptions& opt = milnor_defaults());

// ---------------------------------------------------------------------------
// Singularity transport rules
// ---------------------------------------------------------------------------

// The eight local transport rules used by the constructions:
//   CyclicOnFiber    A_{2s-1} transversal on a branch fiber, degree d -> A_{2ds-1}
//   CyclicOffFiber   type T off the branch fibers, degree d -> d copies of T
//   FiberAugment     A_{2s-1} plus an added transversal smooth fiber -> D_{2s+2}
//   SmoothPair       two smooth branch parts meeting in A_{2n+1} -> A_n upstairs
//   NodePlusSmooth   part with A_1 + smooth part, union D_{2n+4} -> D_{n+3}
//   SingularPlusSmooth part with A_n + smooth part, union D_{n+3} -> A_{2n+1}
//   CrossNode        transversal node across two branch parts -> smooth point
//   Disjoint         singularity of a single part away from the others -> two copies
enum class TransportRule {
    CyclicOnFiber,
    CyclicOffFiber,
    FiberAugment,
    SmoothPair,
    NodePlusSmooth,
    SingularPlusSmooth,
    CrossNode,
    Disjoint,
};

std::string to_string(TransportRule r);

// Census contribution of one rule application. `input` is the relevant ADE
// type (the on-fiber/off-fiber singularity for the cyclic rules, the union
// type for the bidouble rules, the part type for Disjoint). `param` is the
// cover degree for the cyclic rules and is ignored elsewhere.
SingularityCensus transport(TransportRule rule, const AdeType& input, long param = 0);

}  // namespace rhomax
