#include "rhomax/plane_oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rhomax {

// ---------------------------------------------------------------------------
// points and lines
// ---------------------------------------------------------------------------

ProjTriple ProjTriple::of(const Rat& a, const Rat& b, const Rat& c) {
    std::array<Rat, 3> v{a, b, c};
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (v[i] != 0) { pivot = i; break; }
    if (pivot < 0) throw Error("shape", "zero projective triple");
    const Rat s = v[pivot];
    for (auto& x : v) x /= s;
    return ProjTriple{v};
}

ProjTriple ProjTriple::of_ints(long a, long b, long c) {
    return of(Rat(a), Rat(b), Rat(c));
}

std::string ProjTriple::text() const {
    std::ostringstream os;
    os << "(" << v[0].get_str() << ":" << v[1].get_str() << ":" << v[2].get_str() << ")";
    return os.str();
}

namespace {
std::array<Rat, 3> cross(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
}  // namespace

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw Error("precondition", "join of equal points " + p.text());
    auto c = cross(p.v, q.v);
    return ProjTriple::of(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2) throw Error("precondition", "meet of equal lines " + l1.text());
    auto c = cross(l1.v, l2.v);
    return ProjTriple::of(c[0], c[1], c[2]);
}

bool incident(const ProjPoint& p, const ProjLine& l) {
    return p.v[0] * l.v[0] + p.v[1] * l.v[1] + p.v[2] * l.v[2] == 0;
}

PlaneCurve PlaneCurve::of(Poly3 f) {
    if (f.is_zero()) throw Error("shape", "zero curve");
    if (!f.is_homogeneous()) throw Error("shape", "curve polynomial is not homogeneous");
    PlaneCurve c{std::move(f), 0};
    c.degree = c.f.degree();
    return c;
}

PlaneCurve PlaneCurve::line(const ProjLine& l) {
    return of(line_poly(l.v[0], l.v[1], l.v[2]));
}

const PlaneCurve& Arrangement::curve(const std::string& label) const {
    auto it = curves.find(label);
    if (it == curves.end()) throw Error("parameter", "unknown curve '" + label + "'");
    return it->second;
}

const ProjPoint& Arrangement::point(const std::string& label) const {
    auto it = points.find(label);
    if (it == points.end()) throw Error("parameter", "unknown point '" + label + "'");
    return it->second;
}

std::vector<std::string> Arrangement::curves_through(const ProjPoint& p) const {
    std::vector<std::string> r;
    for (const auto& [label, c] : curves)
        if (c.passes_through(p)) r.push_back(label);
    return r;
}

// ---------------------------------------------------------------------------
// local analysis
// ---------------------------------------------------------------------------

namespace {

// affine chart centered at p: pivot coordinate frozen, the other two free
Poly2 chart_germ(const Poly3& f, const ProjPoint& p) {
    int pivot = 0;
    while (p.v[pivot] == 0) ++pivot;
    std::array<Rat, 3> b1{0, 0, 0}, b2{0, 0, 0};
    int free1 = (pivot == 0) ? 1 : 0;
    int free2 = (pivot == 2) ? 1 : 2;
    b1[free1] = 1;
    b2[free2] = 1;
    return f.chart(p.v, b1, b2);
}

}  // namespace

Int contact_order(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPoint& p) {
    const bool on1 = c1.passes_through(p), on2 = c2.passes_through(p);
    if (!on1 || !on2) return 0;
    auto m = local_intersection_multiplicity(chart_germ(c1.f, p), chart_germ(c2.f, p));
    if (!m) throw Error("data", "curves share a component through " + p.text());
    return *m;
}

Germ local_germ(const Arrangement& a, const std::vector<std::string>& labels, const ProjPoint& p) {
    if (labels.empty()) throw Error("precondition", "local germ of an empty curve selection");
    bool some_through = false;
    Poly3 prod;
    prod.set(0, 0, 0, 1);
    for (const auto& label : labels) {
        const PlaneCurve& c = a.curve(label);
        some_through = some_through || c.passes_through(p);
        prod = prod * c.f;
    }
    if (!some_through)
        throw Error("precondition", "point " + p.text() + " lies on none of the selected curves");
    return Germ::of(chart_germ(prod, p));
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

bool proportional(const Poly3& f, const Poly3& g) {
    if (f.terms().size() != g.terms().size()) return false;
    Rat ratio = 0;
    for (auto itf = f.terms().begin(), itg = g.terms().begin(); itf != f.terms().end();
         ++itf, ++itg) {
        if (!(itf->first == itg->first)) return false;
        Rat r = itf->second / itg->second;
        if (ratio == 0)
            ratio = r;
        else if (r != ratio)
            return false;
    }
    return true;
}

bool squarefree(const PlaneCurve& c) {
    for (int chart = 0; chart < 3; ++chart) {
        std::array<Rat, 3> pt{0, 0, 0};
        pt[chart] = 1;
        std::array<Rat, 3> b1{0, 0, 0}, b2{0, 0, 0};
        b1[chart == 0 ? 1 : 0] = 1;
        b2[chart == 2 ? 1 : 2] = 1;
        Poly2 g = c.f.chart(pt, b1, b2);
        if (g.degree() < 1) continue;
        Poly2 h = gcd2(gcd2(g, g.dx()), g.dy());
        if (h.degree() >= 1) return false;
    }
    return true;
}

// delta invariant of the unibranch ADE germs; the completeness certificate
// below only applies to curves all of whose singularities are unibranch
std::optional<Int> delta_unibranch(const AdeType& t) {
    if (t.letter == 'A' && t.index % 2 == 0) return Int(t.index / 2);
    if (t.letter == 'E' && t.index == 6) return Int(3);
    if (t.letter == 'E' && t.index == 8) return Int(4);
    return std::nullopt;
}

Rat conic_det(const Poly3& f) {
    // matrix of the quadratic form, doubled diagonal
    const Rat a = [&] { for (auto& [m, c] : f.terms()) if (m == Mon3{2,0,0}) return c; return Rat(0); }();
    const Rat d = [&] { for (auto& [m, c] : f.terms()) if (m == Mon3{0,2,0}) return c; return Rat(0); }();
    const Rat g = [&] { for (auto& [m, c] : f.terms()) if (m == Mon3{0,0,2}) return c; return Rat(0); }();
    const Rat b = [&] { for (auto& [m, c] : f.terms()) if (m == Mon3{1,1,0}) return c; return Rat(0); }();
    const Rat e = [&] { for (auto& [m, c] : f.terms()) if (m == Mon3{1,0,1}) return c; return Rat(0); }();
    const Rat h = [&] { for (auto& [m, c] : f.terms()) if (m == Mon3{0,1,1}) return c; return Rat(0); }();
    const Rat m00 = 2 * a, m11 = 2 * d, m22 = 2 * g;
    return m00 * (m11 * m22 - h * h) - b * (b * m22 - h * e) + e * (b * h - m11 * e);
}

}  // namespace

std::vector<std::string> verify_arrangement(const Arrangement& a) {
    std::vector<std::string> v;

    // structural: distinct points, distinct squarefree curves
    for (auto it1 = a.points.begin(); it1 != a.points.end(); ++it1)
        for (auto it2 = std::next(it1); it2 != a.points.end(); ++it2)
            if (it1->second == it2->second)
                v.push_back("points '" + it1->first + "' and '" + it2->first + "' coincide");
    for (auto it1 = a.curves.begin(); it1 != a.curves.end(); ++it1) {
        if (!squarefree(it1->second))
            v.push_back("curve '" + it1->first + "' is not squarefree");
        for (auto it2 = std::next(it1); it2 != a.curves.end(); ++it2)
            if (it1->second.degree == it2->second.degree &&
                proportional(it1->second.f, it2->second.f))
                v.push_back("curves '" + it1->first + "' and '" + it2->first + "' coincide");
    }

    // declared incidences and non-incidences
    for (const auto& [pl, cl] : a.on)
        if (!a.curve(cl).passes_through(a.point(pl)))
            v.push_back("point '" + pl + "' is not on curve '" + cl + "'");
    for (const auto& [pl, cl] : a.off)
        if (a.curve(cl).passes_through(a.point(pl)))
            v.push_back("point '" + pl + "' unexpectedly lies on curve '" + cl + "'");

    // declared contact orders
    for (const auto& ct : a.contacts) {
        try {
            Int got = contact_order(a.curve(ct.c1), a.curve(ct.c2), a.point(ct.point));
            if (got != ct.order)
                v.push_back("contact(" + ct.c1 + "," + ct.c2 + ") at '" + ct.point + "' is " +
                            str(got) + ", declared " + str(ct.order));
        } catch (const Error& e) {
            v.push_back(std::string("contact check failed: ") + e.what());
        }
    }

    // pairwise Bezout completeness against the declared points
    for (auto it1 = a.curves.begin(); it1 != a.curves.end(); ++it1)
        for (auto it2 = std::next(it1); it2 != a.curves.end(); ++it2) {
            Int total = 0;
            try {
                for (const auto& [pl, pt] : a.points)
                    total += contact_order(it1->second, it2->second, pt);
            } catch (const Error& e) {
                v.push_back(std::string("intersection audit failed: ") + e.what());
                continue;
            }
            const Int expect = Int(it1->second.degree) * Int(it2->second.degree);
            if (total != expect)
                v.push_back("curves '" + it1->first + "' and '" + it2->first +
                            "' have undeclared intersections (found multiplicity " + str(total) +
                            " of " + str(expect) + ")");
        }

    // component singular censuses
    for (const auto& [label, c] : a.curves) {
        auto it = a.component_singular.find(label);
        const bool declared = it != a.component_singular.end() && !it->second.empty();
        if (c.degree == 1) {
            if (declared) v.push_back("line '" + label + "' cannot be singular");
            continue;
        }
        if (c.degree == 2) {
            if (declared) v.push_back("conic '" + label + "' declared singular; only smooth conics are supported");
            if (conic_det(c.f) == 0)
                v.push_back("conic '" + label + "' is singular or degenerate");
            continue;
        }
        if (c.degree == 3) {
            if (!declared) {
                v.push_back("cubic '" + label + "' needs a declared singular census to certify");
                continue;
            }
            Int delta_total = 0;
            bool ok = true;
            for (const auto& [pl, type] : it->second) {
                GermClass got = classify_germ(local_germ(a, {label}, a.point(pl)));
                if (!(got.kind == GermClass::Kind::Ade && *got.type == type)) {
                    v.push_back("curve '" + label + "' at '" + pl + "': germ is " + got.label() +
                                ", declared " + type.label());
                    ok = false;
                    continue;
                }
                auto d = delta_unibranch(type);
                if (!d) {
                    v.push_back("curve '" + label + "' at '" + pl + "': " + type.label() +
                                " is multibranch; completeness cannot be certified");
                    ok = false;
                    continue;
                }
                delta_total += *d;
            }
            // a cubic whose verified singularities are all unibranch is
            // irreducible, so the genus budget (d-1)(d-2)/2 bounds the total
            // delta and saturation certifies completeness
            if (ok && delta_total != 1)
                v.push_back("cubic '" + label + "': singular census not certified complete (delta " +
                            str(delta_total) + " of 1)");
            continue;
        }
        v.push_back("curve '" + label + "' of degree " + std::to_string(c.degree) +
                    ": no completeness certificate available");
    }
    return v;
}

// ---------------------------------------------------------------------------
// census derivation
// ---------------------------------------------------------------------------

namespace {

GermClass part_class(const Arrangement& a, const std::vector<std::string>& labels,
                     const ProjPoint& p) {
    return classify_germ(local_germ(a, labels, p));
}

}  // namespace

std::vector<SingularEvent> derive_census(const Arrangement& a, const BranchAssignment& partition) {
    {
        auto violations = verify_arrangement(a);
        if (!violations.empty())
            throw Error("data", "arrangement does not verify: " + violations.front());
    }
    std::vector<SingularEvent> events;
    for (const auto& [pl, pt] : a.points) {
        std::map<Part, std::vector<std::string>> by_part;
        std::vector<std::string> all;
        for (const auto& [cl, part] : partition) {
            if (!a.curve(cl).passes_through(pt)) continue;
            by_part[part].push_back(cl);
            all.push_back(cl);
        }
        if (all.empty()) continue;

        const GermClass union_class = part_class(a, all, pt);
        if (union_class.is(GermClass::Kind::NonIsolated) || union_class.is(GermClass::Kind::NotAde))
            throw Error("data", "germ at '" + pl + "' is " + union_class.label());
        if (union_class.is(GermClass::Kind::Smooth)) continue;

        SingularEvent e;
        e.point = pl;
        e.type = *union_class.type;
        for (const auto& [part, labels] : by_part) e.membership.insert(part);

        if (by_part.size() == 1) {
            e.rule = TransportRule::Disjoint;
        } else if (by_part.size() == 2) {
            std::vector<GermClass> pc;
            for (const auto& [part, labels] : by_part) pc.push_back(part_class(a, labels, pt));
            std::tie(e.rule, e.parameter) = bidouble_rule_two_parts(pl, pc[0], pc[1], e.type);
        } else {
            throw Error("shape", "point '" + pl + "' lies on all three branch parts");
        }
        events.push_back(std::move(e));
    }
    return events;
}

SingularityCensus bidouble_census(const std::vector<SingularEvent>& events) {
    SingularityCensus census;
    for (const auto& e : events) {
        switch (e.rule) {
            case TransportRule::SmoothPair:
            case TransportRule::NodePlusSmooth:
            case TransportRule::SingularPlusSmooth:
            case TransportRule::CrossNode:
            case TransportRule::Disjoint:
                census.merge(transport(e.rule, e.type));
                break;
            default:
                throw Error("shape", "event '" + e.point + "' still carries a cyclic-stage rule");
        }
    }
    return census;
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

namespace {

struct FixtureBuilder {
    Arrangement a;

    void line(const std::string& label, long x0, long x1, long x2) {
        a.curves.emplace(label, PlaneCurve::line(ProjTriple::of_ints(x0, x1, x2)));
    }
    void curve(const std::string& label, Poly3 f) { a.curves.emplace(label, PlaneCurve::of(std::move(f))); }
    void point(const std::string& label, long x0, long x1, long x2) {
        a.points.emplace(label, ProjTriple::of_ints(x0, x1, x2));
    }
    void rational_point(const std::string& label, const Rat& x0, const Rat& x1, const Rat& x2) {
        a.points.emplace(label, ProjTriple::of(x0, x1, x2));
    }
    void on(const std::string& pt, std::initializer_list<std::string> curves) {
        for (const auto& c : curves) a.on.emplace_back(pt, c);
    }
    void off(const std::string& pt, std::initializer_list<std::string> curves) {
        for (const auto& c : curves) a.off.emplace_back(pt, c);
    }
    void contact(const std::string& c1, const std::string& c2, const std::string& pt, long n) {
        a.contacts.push_back({c1, c2, pt, Int(n)});
    }
};

}  // namespace

PlaneFixture instantiate_family_a() {
    FixtureBuilder b;
    b.line("l1", 1, 0, 0);
    b.line("l2", 0, 1, 0);
    b.line("l3", 0, 0, 1);
    b.line("l4", 1, 1, 1);
    b.line("l5", 1, 1, 0);    // <P1,P6>
    b.line("l6", 0, 1, 1);    // <P2,P4>
    b.line("l7", 1, 2, 1);    // <Q,P5>
    b.line("l8", -1, 0, 1);   // <Q,P3>

    b.point("P1", 0, 0, 1);
    b.point("P2", 1, 0, 0);
    b.point("P3", 0, 1, 0);
    b.point("P4", 0, 1, -1);
    b.point("P5", 1, 0, -1);
    b.point("P6", 1, -1, 0);
    b.point("P7", 1, 0, 1);
    b.point("Q", 1, -1, 1);
    b.point("T71", 0, 1, -2);
    b.point("T73", 2, -1, 0);
    b.point("T84", 1, -2, 1);

    b.on("P1", {"l1", "l2", "l5"});
    b.on("P2", {"l2", "l3", "l6"});
    b.on("P3", {"l1", "l3", "l8"});
    b.on("P4", {"l1", "l4", "l6"});
    b.on("P5", {"l2", "l4", "l7"});
    b.on("P6", {"l3", "l4", "l5"});
    b.on("P7", {"l2", "l8"});
    b.on("Q", {"l5", "l6", "l7", "l8"});
    b.on("T71", {"l1", "l7"});
    b.on("T73", {"l3", "l7"});
    b.on("T84", {"l4", "l8"});

    // genericity: Q off the original four lines, P7 a plain crossing
    b.off("Q", {"l1", "l2", "l3", "l4"});
    b.off("P7", {"l1", "l3", "l4", "l5", "l6", "l7"});
    b.off("T71", {"l2", "l3", "l4", "l5", "l6", "l8"});
    b.off("T73", {"l1", "l2", "l4", "l5", "l6", "l8"});
    b.off("T84", {"l1", "l2", "l3", "l5", "l6", "l7"});

    // transversality of the sections to the would-be branch fibers
    b.contact("l1", "l5", "P1", 1);
    b.contact("l2", "l5", "P1", 1);
    b.contact("l2", "l6", "P2", 1);
    b.contact("l3", "l6", "P2", 1);
    b.contact("l1", "l6", "P4", 1);
    b.contact("l4", "l6", "P4", 1);
    b.contact("l3", "l5", "P6", 1);
    b.contact("l4", "l5", "P6", 1);

    PlaneFixture f;
    f.arrangement = std::move(b.a);
    f.partition = {
        {"l1", Part::B3}, {"l2", Part::B3}, {"l3", Part::B3}, {"l5", Part::B3},
        {"l6", Part::B3}, {"l8", Part::B3}, {"l4", Part::B2}, {"l7", Part::B2},
    };
    f.section_partition = {
        {"l1", Part::B3}, {"l2", Part::B3}, {"l3", Part::B3}, {"l4", Part::B2},
    };
    f.blowup_point = "Q";
    f.branch_fibers = {"l5", "l6"};
    f.split_fibers = {"l7", "l8"};
    for (const char* s : {"l1", "l2", "l3", "l4"}) f.f1_class[s] = {1, 1};
    for (const char* s : {"l5", "l6", "l7", "l8"}) f.f1_class[s] = {0, 1};
    return f;
}

PlaneFixture instantiate_family_b() {
    FixtureBuilder b;
    {
        Poly3 conic;  // X1^2 - X0 X2
        conic.set(0, 2, 0, 1);
        conic.set(1, 0, 1, -1);
        b.curve("C", std::move(conic));
    }
    b.line("l1", 0, 0, 1);     // tangent at P1
    b.line("l2", -1, 2, -1);   // tangent at P2
    b.line("l3", 1, 2, 1);     // tangent at P3
    b.line("l4", 0, 1, 0);     // <P1,P4>
    b.line("l5", 1, -2, 0);    // <Q,P5>
    b.line("l6", 1, -1, 0);    // <Q,P2>

    b.point("P1", 1, 0, 0);
    b.point("P2", 1, 1, 1);
    b.point("P3", 1, -1, 1);
    b.point("P4", 1, 0, -1);
    b.point("P5", 2, 1, 0);
    b.point("P6", 2, 1, -4);
    b.point("P7", 1, 1, 0);
    b.point("P8", 4, 2, 1);
    b.point("Q", 0, 0, 1);
    b.point("T13", 2, -1, 0);
    b.point("T36", 1, 1, -3);

    b.on("P1", {"C", "l1", "l4"});
    b.on("P2", {"C", "l2", "l6"});
    b.on("P3", {"C", "l3"});
    b.on("P4", {"l2", "l3", "l4"});
    b.on("P5", {"l1", "l2", "l5"});
    b.on("P6", {"l3", "l5"});
    b.on("P7", {"l1", "l6"});
    b.on("P8", {"C", "l5"});
    b.on("Q", {"C", "l4", "l5", "l6"});
    b.on("T13", {"l1", "l3"});
    b.on("T36", {"l3", "l6"});

    b.off("Q", {"l1", "l2", "l3"});
    b.off("P8", {"l1", "l2", "l3", "l4", "l6"});
    b.off("P6", {"C", "l1", "l2", "l4", "l6"});
    b.off("P7", {"C", "l2", "l3", "l4", "l5"});
    b.off("T13", {"C", "l2", "l4", "l5", "l6"});
    b.off("T36", {"C", "l1", "l2", "l4", "l5"});

    b.contact("C", "l1", "P1", 2);
    b.contact("C", "l2", "P2", 2);
    b.contact("C", "l3", "P3", 2);
    b.contact("C", "l4", "P1", 1);
    b.contact("C", "l4", "Q", 1);
    b.contact("C", "l5", "Q", 1);
    b.contact("C", "l6", "Q", 1);
    b.contact("C", "l6", "P2", 1);
    b.contact("l1", "l4", "P1", 1);
    b.contact("l2", "l6", "P2", 1);
    b.contact("l2", "l4", "P4", 1);
    b.contact("l3", "l4", "P4", 1);

    PlaneFixture f;
    f.arrangement = std::move(b.a);
    f.partition = {
        {"C", Part::B3}, {"l1", Part::B3}, {"l2", Part::B3}, {"l4", Part::B3},
        {"l6", Part::B3}, {"l3", Part::B2}, {"l5", Part::B2},
    };
    f.section_partition = {
        {"C", Part::B3}, {"l1", Part::B3}, {"l2", Part::B3}, {"l3", Part::B2},
    };
    f.blowup_point = "Q";
    f.branch_fibers = {"l4", "l6"};
    f.split_fibers = {"l5"};
    for (const char* s : {"l1", "l2", "l3"}) f.f1_class[s] = {1, 1};
    f.f1_class["C"] = {1, 2};
    for (const char* s : {"l4", "l5", "l6"}) f.f1_class[s] = {0, 1};
    return f;
}

PlaneFixture instantiate_m13() {
    FixtureBuilder b;
    {
        Poly3 cubic;  // X1^3 - X0 X2^2
        cubic.set(0, 3, 0, 1);
        cubic.set(1, 0, 2, -1);
        b.curve("C", std::move(cubic));
    }
    b.line("la", 1, 0, 0);    // inflection tangent
    b.line("lb", 0, 0, 1);    // cuspidal tangent
    b.line("t2", -1, 3, -2);  // tangent at (1:1:1)
    b.line("t3", 4, -3, 1);   // tangent at (1:4:8)

    b.point("cusp", 1, 0, 0);
    b.point("node", 0, 1, 0);
    b.point("infl", 0, 0, 1);
    b.point("P2", 1, 1, 1);
    b.point("P3", 1, 4, 8);
    b.point("S2", 8, 2, -1);
    b.point("S3", 1, 1, -1);
    b.point("A2a", 0, 2, 3);
    b.point("A2b", 3, 1, 0);
    b.point("A3a", 0, 1, 3);
    b.point("A3b", 3, 4, 0);
    b.point("X23", 3, 7, 9);

    b.on("cusp", {"C", "lb"});
    b.on("node", {"la", "lb"});
    b.on("infl", {"C", "la"});
    b.on("P2", {"C", "t2"});
    b.on("P3", {"C", "t3"});
    b.on("S2", {"C", "t2"});
    b.on("S3", {"C", "t3"});
    b.on("A2a", {"la", "t2"});
    b.on("A2b", {"lb", "t2"});
    b.on("A3a", {"la", "t3"});
    b.on("A3b", {"lb", "t3"});
    b.on("X23", {"t2", "t3"});

    b.off("cusp", {"la", "t2", "t3"});
    b.off("node", {"C", "t2", "t3"});
    b.off("infl", {"lb", "t2", "t3"});
    b.off("P2", {"la", "lb", "t3"});
    b.off("P3", {"la", "lb", "t2"});
    b.off("X23", {"C", "la", "lb"});
    b.off("S2", {"la", "lb", "t3"});
    b.off("S3", {"la", "lb", "t2"});

    b.contact("C", "lb", "cusp", 3);
    b.contact("C", "la", "infl", 3);
    b.contact("C", "t2", "P2", 2);
    b.contact("C", "t3", "P3", 2);
    b.contact("C", "t2", "S2", 1);
    b.contact("C", "t3", "S3", 1);
    b.contact("la", "lb", "node", 1);

    b.a.component_singular["C"] = {{"cusp", AdeType::A(2)}};

    PlaneFixture f;
    f.arrangement = std::move(b.a);
    f.partition = {
        {"C", Part::B1}, {"la", Part::B1}, {"lb", Part::B1},
        {"t2", Part::B2}, {"t3", Part::B3},
    };
    f.section_partition = f.partition;
    return f;
}

}  // namespace rhomax
