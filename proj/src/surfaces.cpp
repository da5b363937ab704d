#include "rhomax/surfaces.hpp"

#include <sstream>

namespace rhomax {

BaseSurface BaseSurface::hirzebruch(long e) {
    if (e < 0) throw Error("parameter", "Hirzebruch surface needs e >= 0");
    return {SurfaceKind::Hirzebruch, e};
}

int BaseSurface::lattice_rank() const {
    switch (kind) {
        case SurfaceKind::ProjectivePlane: return 1;
        case SurfaceKind::Hirzebruch: return 2;
        case SurfaceKind::BlownUpHirzebruch1: return 3;
    }
    return 0;
}

std::string BaseSurface::name() const {
    switch (kind) {
        case SurfaceKind::ProjectivePlane: return "P2";
        case SurfaceKind::Hirzebruch: return "F" + std::to_string(e);
        case SurfaceKind::BlownUpHirzebruch1: return "BlF1";
    }
    return "?";
}

DivisorClass::DivisorClass(BaseSurface s, std::vector<Int> coeffs)
    : surface(s), c(std::move(coeffs)) {
    if ((int)c.size() != surface.lattice_rank())
        throw Error("shape", "divisor class has " + std::to_string(c.size()) +
                                 " coordinates on " + surface.name());
}

bool DivisorClass::is_zero() const {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (!(surface == o.surface)) throw Error("lattice_mismatch", "adding classes on different surfaces");
    std::vector<Int> r = c;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c[i];
    return DivisorClass(surface, std::move(r));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (!(surface == o.surface)) throw Error("lattice_mismatch", "subtracting classes on different surfaces");
    std::vector<Int> r = c;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c[i];
    return DivisorClass(surface, std::move(r));
}

DivisorClass DivisorClass::scaled(const Int& k) const {
    std::vector<Int> r = c;
    for (auto& v : r) v *= k;
    return DivisorClass(surface, std::move(r));
}

std::string DivisorClass::text() const {
    static const char* basis_p2[] = {"H"};
    static const char* basis_fe[] = {"D0", "F"};
    static const char* basis_bl[] = {"b*D0", "b*F", "E"};
    const char** basis = surface.kind == SurfaceKind::ProjectivePlane ? basis_p2
                        : surface.kind == SurfaceKind::Hirzebruch     ? basis_fe
                                                                      : basis_bl;
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) os << a.get_str() << "*";
        os << basis[i];
    }
    if (first) os << "0";
    return os.str();
}

DivisorClass plane_class(const Int& d) { return DivisorClass(BaseSurface::plane(), {d}); }

DivisorClass hirzebruch_class(long e, const Int& a, const Int& b) {
    return DivisorClass(BaseSurface::hirzebruch(e), {a, b});
}

DivisorClass blowup_class(const Int& a, const Int& b, const Int& g) {
    return DivisorClass(BaseSurface::blownup_f1(), {a, b, g});
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2) {
    if (!(d1.surface == d2.surface))
        throw Error("lattice_mismatch", "intersection of classes on " + d1.surface.name() +
                                            " and " + d2.surface.name());
    switch (d1.surface.kind) {
        case SurfaceKind::ProjectivePlane:
            return d1.c[0] * d2.c[0];
        case SurfaceKind::Hirzebruch: {
            // D0^2 = -e, D0.F = 1, F^2 = 0
            const Int e = d1.surface.e;
            return -e * d1.c[0] * d2.c[0] + d1.c[0] * d2.c[1] + d1.c[1] * d2.c[0];
        }
        case SurfaceKind::BlownUpHirzebruch1:
            // pullback lattice of F_1 orthogonal to E, E^2 = -1
            return -d1.c[0] * d2.c[0] + d1.c[0] * d2.c[1] + d1.c[1] * d2.c[0] -
                   d1.c[2] * d2.c[2];
    }
    throw Error("internal", "unknown surface kind");
}

DivisorClass canonical_class(const BaseSurface& s) {
    switch (s.kind) {
        case SurfaceKind::ProjectivePlane: return plane_class(-3);
        case SurfaceKind::Hirzebruch: return hirzebruch_class(s.e, -2, -(Int(s.e) + 2));
        case SurfaceKind::BlownUpHirzebruch1: return blowup_class(-2, -3, 1);  // b*K_{F1} + E
    }
    throw Error("internal", "unknown surface kind");
}

Int h0(const DivisorClass& d) {
    switch (d.surface.kind) {
        case SurfaceKind::ProjectivePlane: {
            const Int& n = d.c[0];
            if (n < 0) return 0;
            return (n + 2) * (n + 1) / 2;
        }
        case SurfaceKind::Hirzebruch: {
            const Int &a = d.c[0], &b = d.c[1];
            if (a < 0) return 0;
            Int total = 0;
            for (Int i = 0; i <= a; ++i) {
                Int t = b - i * d.surface.e + 1;
                if (t > 0) total += t;
            }
            return total;
        }
        case SurfaceKind::BlownUpHirzebruch1:
            throw Error("unsupported_surface", "h0 is not defined on the blown-up surface");
    }
    throw Error("internal", "unknown surface kind");
}

Positivity positivity(const DivisorClass& d) {
    switch (d.surface.kind) {
        case SurfaceKind::ProjectivePlane: {
            if (d.c[0] > 0) return Positivity::Ample;
            if (d.c[0] == 0) return Positivity::NefNotAmple;
            return Positivity::NotNef;
        }
        case SurfaceKind::Hirzebruch: {
            const Int &a = d.c[0], &b = d.c[1];
            const Int ae = a * d.surface.e;
            if (a > 0 && b > ae) return Positivity::Ample;
            if (a >= 0 && b >= ae && b >= 0) return Positivity::NefNotAmple;
            return Positivity::NotNef;
        }
        case SurfaceKind::BlownUpHirzebruch1:
            throw Error("unsupported_surface",
                        "positivity on the blown-up surface goes through the nef pairing check");
    }
    throw Error("internal", "unknown surface kind");
}

std::string to_string(Positivity p) {
    switch (p) {
        case Positivity::Ample: return "Ample";
        case Positivity::NefNotAmple: return "NefNotAmple";
        case Positivity::NotNef: return "NotNef";
    }
    return "?";
}

SurfaceInvariants::SurfaceInvariants(Int k2_, Int chi_, Int pg_, Int q_, Int h11_)
    : k2(std::move(k2_)), chi(std::move(chi_)), pg(std::move(pg_)), q(std::move(q_)), h11(std::move(h11_)) {
    if (pg < 0 || q < 0 || h11 < 0)
        throw Error("data", "invariants out of range: pg=" + str(pg) + " q=" + str(q) + " h11=" + str(h11));
    if (chi != 1 + pg - q)
        throw Error("data", "chi != 1 + pg - q (" + str(chi) + " vs " + str(Int(1 + pg - q)) + ")");
    if (h11 != 10 * chi - k2 - 2 * q)
        throw Error("data", "h11 != 10chi - K2 - 2q (" + str(h11) + " vs " + str(Int(10 * chi - k2 - 2 * q)) + ")");
}

SurfaceInvariants SurfaceInvariants::from_k2_chi_pg(const Int& k2, const Int& chi, const Int& pg) {
    Int q = 1 + pg - chi;
    return SurfaceInvariants(k2, chi, pg, q, 10 * chi - k2 - 2 * q);
}

}  // namespace rhomax
