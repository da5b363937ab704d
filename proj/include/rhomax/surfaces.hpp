#pragma once

#include <string>
#include <vector>

#include "rhomax/numeric.hpp"

namespace rhomax {

// The three base surfaces the constructions live on: P^2, a Hirzebruch
// surface F_e, and F_1 blown up at one point. Picard lattice bases are fixed
// once and for all: (H), (D0, F) and (b*D0, b*F, E).
enum class SurfaceKind { ProjectivePlane, Hirzebruch, BlownUpHirzebruch1 };

struct BaseSurface {
    SurfaceKind kind = SurfaceKind::ProjectivePlane;
    long e = 0;  // only meaningful for Hirzebruch

    static BaseSurface plane() { return {SurfaceKind::ProjectivePlane, 0}; }
    static BaseSurface hirzebruch(long e);
    static BaseSurface blownup_f1() { return {SurfaceKind::BlownUpHirzebruch1, 0}; }

    int lattice_rank() const;
    std::string name() const;
    bool operator==(const BaseSurface&) const = default;
};

struct DivisorClass {
    BaseSurface surface;
    std::vector<Int> c;  // coordinates in the fixed basis

    DivisorClass() = default;
    DivisorClass(BaseSurface s, std::vector<Int> coeffs);

    bool is_zero() const;
    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass scaled(const Int& k) const;
    bool operator==(const DivisorClass&) const = default;
    std::string text() const;
};

DivisorClass plane_class(const Int& d);                     // d*H
DivisorClass hirzebruch_class(long e, const Int& a, const Int& b);  // a*D0 + b*F
DivisorClass blowup_class(const Int& a, const Int& b, const Int& g);     // b*(a D0 + b F) + g*E

// Symmetric bilinear intersection number; both classes must live on the same
// lattice.
Int intersect(const DivisorClass& d1, const DivisorClass& d2);

DivisorClass canonical_class(const BaseSurface& s);

// dim H^0 of the line bundle. Supported on P^2 and F_e only.
Int h0(const DivisorClass& d);

enum class Positivity { Ample, NefNotAmple, NotNef };
Positivity positivity(const DivisorClass& d);
std::string to_string(Positivity p);

// (K^2, chi, p_g, q, h11) with the Hodge-theoretic identities enforced:
// h11 = 10 chi - K^2 - 2q and chi = 1 + p_g - q.
struct SurfaceInvariants {
    Int k2, chi, pg, q, h11;

    SurfaceInvariants(Int k2_, Int chi_, Int pg_, Int q_, Int h11_);
    static SurfaceInvariants from_k2_chi_pg(const Int& k2, const Int& chi, const Int& pg);
    bool operator==(const SurfaceInvariants&) const = default;
};

}  // namespace rhomax
