#include "rhomax/constructions.hpp"

#include <algorithm>
#include <set>

namespace rhomax {

std::string to_string(Family f) { return f == Family::A ? "a" : "b"; }

void FamilyParams::validate() const {
    const std::string fam = family == Family::A ? "family A" : "family B";
    if (n < 0 || m < 0 || k < 0)
        throw Error("parameter", fam + ": parameters must be nonnegative");
    constexpr long kLimit = 1000000000000LL;  // keeps Dynkin indices in machine range
    if (n > kLimit || m > kLimit || k > kLimit)
        throw Error("parameter", fam + ": parameter exceeds the supported range");
    if (2 * n + k == 0) throw Error("parameter", fam + ": constraint 2n+k != 0 violated");
    if (m > 2 * n + k) throw Error("parameter", fam + ": constraint m <= 2n+k violated");
    if ((m - k) % 2 != 0)
        throw Error("parameter", fam + ": parity constraint m = k (mod 2) violated");
    if (family == Family::A) {
        if (n == 1 && m == 0 && k == 0)
            throw Error("parameter", fam + ": (n,m,k) = (1,0,0) is excluded");
    } else {
        if (k > m) throw Error("parameter", fam + ": constraint k <= m violated");
    }
}

SurfaceInvariants closed_form_invariants(const FamilyParams& p) {
    const Int n = p.n, m = p.m, k = p.k;
    if (p.family == Family::A)
        return SurfaceInvariants::from_k2_chi_pg(6 * n + 2 * m + 5 * k - 4, 3 * n + m + 2 * k + 1,
                                                 3 * n + m + 2 * k);
    return SurfaceInvariants::from_k2_chi_pg(10 * n + 2 * m + 5 * k - 4, 5 * n + m + 2 * k + 1,
                                             5 * n + m + 2 * k);
}

SingularityCensus closed_form_census(const FamilyParams& p) {
    const long n = p.n, m = p.m, k = p.k;
    SingularityCensus c;
    if (p.family == Family::A) {
        c.add(AdeType::D(4 * n + 2 * k + 2), 4);
        c.add(AdeType::D(4), 2 * m);
        c.add(AdeType::A(1), 4 * n + 2 * k);
        c.add(AdeType::D(2 * n + k + 2), 2);
        c.add(AdeType::A(3), k);
    } else {
        c.add(AdeType::D(8 * n + 4 * k + 2), 4);
        c.add(AdeType::A(1), 4 * n + 2 * k + 2);
        c.add(AdeType::D(4), 2 * m - 2 * k);
        c.add(AdeType::D(2 * n + k + 2), 1);
        c.add(AdeType::A(3), k);
        c.add(AdeType::A(1), 2 * n + k);
    }
    return c;
}

// ---------------------------------------------------------------------------
// transport pipeline
// ---------------------------------------------------------------------------

namespace {

using PairKey = std::pair<std::string, std::string>;

PairKey key2(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

struct Seed {
    std::string point;
    std::vector<std::string> curves;
    std::map<PairKey, long> contact;
    bool on_branch_fiber = false;
    std::string anchor;  // branch fiber through the point, if any
};

struct FamilyGeometry {
    PlaneFixture fixture;
    std::vector<Seed> seeds;
    std::vector<std::string> through_center;
};

FamilyGeometry build_geometry(PlaneFixture fx) {
    FamilyGeometry g{std::move(fx), {}, {}};
    const Arrangement& a = g.fixture.arrangement;
    {
        auto v = verify_arrangement(a);
        if (!v.empty()) throw Error("data", "fixture arrangement does not verify: " + v.front());
    }
    const ProjPoint& q = a.point(g.fixture.blowup_point);
    for (const auto& [label, part] : g.fixture.partition)
        if (a.curve(label).passes_through(q)) g.through_center.push_back(label);
    // the blow-up separates all configuration curves at the center
    for (std::size_t i = 0; i < g.through_center.size(); ++i)
        for (std::size_t j = i + 1; j < g.through_center.size(); ++j)
            if (contact_order(a.curve(g.through_center[i]), a.curve(g.through_center[j]), q) != 1)
                throw Error("data", "curves '" + g.through_center[i] + "' and '" +
                                        g.through_center[j] + "' are tangent at the blow-up center");

    std::set<std::string> branch_fibers(g.fixture.branch_fibers.begin(),
                                        g.fixture.branch_fibers.end());
    for (const auto& [pl, pt] : a.points) {
        if (pl == g.fixture.blowup_point) continue;
        Seed s;
        s.point = pl;
        for (const auto& [cl, part] : g.fixture.partition)
            if (a.curve(cl).passes_through(pt)) s.curves.push_back(cl);
        if (s.curves.size() < 2) continue;
        for (const auto& cl : s.curves) {
            GermClass gc = classify_germ(local_germ(a, {cl}, pt));
            if (!gc.is(GermClass::Kind::Smooth))
                throw Error("data", "curve '" + cl + "' is singular at '" + pl +
                                        "'; the family pipeline needs smooth branches");
        }
        for (std::size_t i = 0; i < s.curves.size(); ++i)
            for (std::size_t j = i + 1; j < s.curves.size(); ++j)
                s.contact[key2(s.curves[i], s.curves[j])] =
                    to_ll(contact_order(a.curve(s.curves[i]), a.curve(s.curves[j]), pt));
        for (const auto& cl : s.curves)
            if (branch_fibers.count(cl)) {
                if (s.on_branch_fiber)
                    throw Error("data", "point '" + pl + "' lies on two branch fibers");
                s.on_branch_fiber = true;
                s.anchor = cl;
            }
        g.seeds.push_back(std::move(s));
    }
    return g;
}

const FamilyGeometry& geometry(Family f) {
    static const FamilyGeometry ga = build_geometry(instantiate_family_a());
    static const FamilyGeometry gb = build_geometry(instantiate_family_b());
    return f == Family::A ? ga : gb;
}

// which part a copy of a split fiber joins, if any
std::optional<Part> split_part(const FamilyParams& p, const std::string& line, long j) {
    if (p.family == Family::A) {
        if (line == "l7") return j <= p.k ? std::optional<Part>(Part::B2) : std::nullopt;
        if (line == "l8") return j <= p.m ? std::optional<Part>(Part::B3) : std::nullopt;
    } else if (line == "l5") {
        if (j <= p.k) return Part::B2;
        if (j <= p.m) return Part::B3;
        return std::nullopt;
    }
    throw Error("internal", "unknown split fiber '" + line + "'");
}

struct UpEvent {
    std::string point;
    std::vector<std::string> branches;
    std::map<PairKey, long> contact;
    bool on_branch_fiber = false;
};

long event_contact(const UpEvent& e, const std::string& a, const std::string& b) {
    auto it = e.contact.find(key2(a, b));
    if (it == e.contact.end())
        throw Error("internal", "missing contact for " + a + "," + b + " at " + e.point);
    return it->second;
}

AdeType union_type_of(const UpEvent& e) {
    if (e.branches.size() == 2)
        return AdeType::A(2 * event_contact(e, e.branches[0], e.branches[1]) - 1);
    if (e.branches.size() == 3) {
        // two branches with contact c and a third transversal to both: D_{2c+2}
        long cs[3] = {event_contact(e, e.branches[0], e.branches[1]),
                           event_contact(e, e.branches[0], e.branches[2]),
                           event_contact(e, e.branches[1], e.branches[2])};
        std::sort(cs, cs + 3);
        if (cs[0] != 1 || cs[1] != 1)
            throw Error("shape", "event '" + e.point + "' has two tangent branch pairs");
        return AdeType::D(2 * cs[2] + 2);
    }
    throw Error("shape", "event '" + e.point + "' has " + std::to_string(e.branches.size()) +
                             " branches; only 2 or 3 are supported");
}

GermClass part_model_class(const UpEvent& e, const std::vector<std::string>& branches) {
    if (branches.size() == 1) return GermClass::smooth();
    if (branches.size() == 2)
        return GermClass::ade(AdeType::A(2 * event_contact(e, branches[0], branches[1]) - 1));
    throw Error("shape", "event '" + e.point + "' has a branch part with three local branches");
}

}  // namespace

PipelineResult census_pipeline(const FamilyParams& p) {
    p.validate();
    const FamilyGeometry& g = geometry(p.family);
    const PlaneFixture& fx = g.fixture;
    const long d = p.cover_degree();

    const std::set<std::string> split(fx.split_fibers.begin(), fx.split_fibers.end());
    const std::set<std::string> branchf(fx.branch_fibers.begin(), fx.branch_fibers.end());

    // the upstairs branch curves with their parts and classes on F_d
    struct UpCurve {
        Part part;
        DivisorClass cls;
    };
    std::map<std::string, UpCurve> up;
    up.emplace("D0", UpCurve{Part::B1, hirzebruch_class(d, 1, 0)});
    for (const auto& [label, part] : fx.partition) {
        const auto& [a1, b1] = fx.f1_class.at(label);
        const DivisorClass down = hirzebruch_class(1, a1, b1);
        if (split.count(label)) {
            // the pullback splits into d disjoint fibers; only the copies
            // joining a branch part matter
            for (long j = 1; j <= d; ++j)
                if (auto pp = split_part(p, label, j))
                    up.emplace(label + "#" + std::to_string(j),
                               UpCurve{*pp, hirzebruch_class(d, 0, 1)});
        } else if (branchf.count(label)) {
            up.emplace(label, UpCurve{part, cyclic_pullback(1, d, down, true).cls});
        } else {
            up.emplace(label, UpCurve{part, cyclic_pullback(1, d, down, false).cls});
        }
    }

    auto upstairs_key = [&](const std::string& label, long j) {
        return split.count(label) ? label + "#" + std::to_string(j) : label;
    };

    // transport the seeds
    std::vector<UpEvent> evs;
    for (const Seed& s : g.seeds) {
        if (s.on_branch_fiber) {
            UpEvent e;
            e.point = s.point;
            e.on_branch_fiber = true;
            e.branches = s.curves;
            std::vector<std::string> sections;
            for (const auto& c : s.curves)
                if (c != s.anchor) {
                    if (split.count(c))
                        throw Error("internal", "split fiber on a branch fiber point");
                    sections.push_back(c);
                }
            if (sections.size() > 2)
                throw Error("shape", "point '" + s.point + "' on a branch fiber has " +
                                         std::to_string(sections.size()) + " transversal branches");
            for (const auto& c : sections)
                if (s.contact.at(key2(c, s.anchor)) != 1)
                    throw Error("shape", "branch of '" + c + "' at '" + s.point +
                                             "' is tangent to the branch fiber; the cyclic cover "
                                             "would leave the ADE class");
            e.contact = s.contact;
            if (sections.size() == 2) {
                // the on-fiber A_{2c-1} becomes A_{2dc-1}
                e.contact[key2(sections[0], sections[1])] =
                    d * s.contact.at(key2(sections[0], sections[1]));
            }
            evs.push_back(std::move(e));
        } else {
            for (long j = 1; j <= d; ++j) {
                UpEvent e;
                e.point = s.point + "#" + std::to_string(j);
                for (const auto& c : s.curves) e.branches.push_back(upstairs_key(c, j));
                for (const auto& [pk, c] : s.contact)
                    e.contact[key2(upstairs_key(pk.first, j), upstairs_key(pk.second, j))] = c;
                evs.push_back(std::move(e));
            }
        }
    }
    // crossings with the exceptional section over the blow-up center
    for (const auto& label : g.through_center) {
        if (branchf.count(label)) {
            UpEvent e{"E:" + label, {"D0", label}, {{key2("D0", label), 1}}, true};
            evs.push_back(std::move(e));
        } else {
            for (long j = 1; j <= d; ++j) {
                const std::string k = upstairs_key(label, j);
                UpEvent e{"E:" + label + "#" + std::to_string(j), {"D0", k}, {{key2("D0", k), 1}}, false};
                evs.push_back(std::move(e));
            }
        }
    }

    // keep branch curves only; a point left with a single smooth branch is no event
    std::vector<UpEvent> kept;
    for (auto& e : evs) {
        std::vector<std::string> bs;
        for (const auto& b : e.branches)
            if (up.count(b)) bs.push_back(b);
        if (bs.size() < 2) continue;
        e.branches = std::move(bs);
        kept.push_back(std::move(e));
    }

    // audit: per curve pair, local contacts must sum to the lattice product
    std::map<PairKey, Int> totals;
    for (const auto& e : kept)
        for (std::size_t i = 0; i < e.branches.size(); ++i)
            for (std::size_t j = i + 1; j < e.branches.size(); ++j)
                totals[key2(e.branches[i], e.branches[j])] +=
                    event_contact(e, e.branches[i], e.branches[j]);
    for (auto it1 = up.begin(); it1 != up.end(); ++it1)
        for (auto it2 = std::next(it1); it2 != up.end(); ++it2) {
            const Int expect = intersect(it1->second.cls, it2->second.cls);
            auto it = totals.find(key2(it1->first, it2->first));
            const Int got = it == totals.end() ? Int(0) : it->second;
            if (expect != got)
                throw Error("internal", "lattice audit failed for " + it1->first + "." + it2->first +
                                            ": tracked " + str(got) + ", lattice " + str(expect));
        }

    // bidouble stage
    PipelineResult r;
    for (const auto& e : kept) {
        std::map<Part, std::vector<std::string>> by_part;
        for (const auto& b : e.branches) by_part[up.at(b).part].push_back(b);

        SingularEvent ev;
        ev.point = e.point;
        ev.on_branch_fiber = e.on_branch_fiber;
        ev.type = union_type_of(e);
        for (const auto& [part, bs] : by_part) ev.membership.insert(part);

        if (by_part.size() == 1) {
            ev.rule = TransportRule::Disjoint;
        } else if (by_part.size() == 2) {
            std::vector<GermClass> pc;
            for (const auto& [part, bs] : by_part) pc.push_back(part_model_class(e, bs));
            std::tie(ev.rule, ev.parameter) = bidouble_rule_two_parts(e.point, pc[0], pc[1], ev.type);
        } else {
            throw Error("shape", "event '" + e.point + "' lies on all three branch parts");
        }
        r.events.push_back(std::move(ev));
    }
    r.census = bidouble_census(r.events);
    return r;
}

// ---------------------------------------------------------------------------
// family records
// ---------------------------------------------------------------------------

namespace {

Int exact_half(const Int& v, const std::string& what) {
    if (v % 2 != 0) throw Error("data", what + " is not integral");
    return v / 2;
}

BuildingData family_building_data(const FamilyParams& p) {
    const Int n = p.n, m = p.m, k = p.k;
    const long d = p.cover_degree();
    BuildingData bd;
    bd.surface = BaseSurface::hirzebruch(d);
    auto cls = [&](const Int& a, const Int& b) { return hirzebruch_class(d, a, b); };
    auto copies = [](const char* base, long from, long to) {
        std::vector<std::string> v;
        for (long j = from; j <= to; ++j) v.push_back(std::string(base) + "#" + std::to_string(j));
        return v;
    };
    if (p.family == Family::A) {
        bd.b1 = {cls(1, 0), {"D0"}};
        bd.b2 = {cls(1, 2 * n + 2 * k), {"l4"}};
        for (auto& s : copies("l7", 1, p.k)) bd.b2.components.push_back(s);
        bd.b3 = {cls(3, 6 * n + m + 3 * k + 2), {"l1", "l2", "l3", "l5", "l6"}};
        for (auto& s : copies("l8", 1, p.m)) bd.b3.components.push_back(s);
        bd.l1 = cls(2, 4 * n + exact_half(m + 5 * k, "(m+5k)/2") + 1);
        bd.l2 = cls(2, 3 * n + exact_half(m + 3 * k, "(m+3k)/2") + 1);
        bd.l3 = cls(1, n + k);
    } else {
        bd.b1 = {cls(1, 0), {"D0"}};
        bd.b2 = {cls(1, 2 * n + 2 * k), {"l3"}};
        for (auto& s : copies("l5", 1, p.k)) bd.b2.components.push_back(s);
        bd.b3 = {cls(3, 8 * n + m + 3 * k + 2), {"C", "l1", "l2", "l4", "l6"}};
        for (auto& s : copies("l5", p.k + 1, p.m)) bd.b3.components.push_back(s);
        bd.l1 = cls(2, 5 * n + exact_half(m + 5 * k, "(m+5k)/2") + 1);
        bd.l2 = cls(2, 4 * n + exact_half(m + 3 * k, "(m+3k)/2") + 1);
        bd.l3 = cls(1, n + k);
    }
    return bd;
}

}  // namespace

ConstructionRecord construct(const FamilyParams& p) {
    p.validate();
    BuildingData bd = family_building_data(p);
    PipelineResult pipeline = census_pipeline(p);
    bd.annotations = pipeline.events;
    {
        auto v = validate_building_data(bd);
        if (!v.empty()) throw Error("data", "building data does not validate: " + v.front());
    }
    const SurfaceInvariants inv = bidouble_invariants(bd);
    if (!(inv == closed_form_invariants(p)))
        throw Error("data", "cover invariants disagree with the closed forms");
    if (inv.q != 0) throw Error("data", "irregularity q = " + str(inv.q) + ", expected 0");
    const SingularityCensus census = closed_form_census(p);
    if (!(pipeline.census == census))
        throw Error("data", "pipeline census " + pipeline.census.text() +
                                " disagrees with the closed form " + census.text());
    if (!half_canonical_ample(bd)) throw Error("data", "2K_Y + B is not ample");
    Certificate cert = certify_maximal(census, 2, 0, inv.h11);
    return ConstructionRecord{p.family == Family::A ? "family_a" : "family_b",
                              p,
                              std::move(bd),
                              census,
                              inv,
                              2,
                              IntMat{},
                              0,
                              cert};
}

ConstructionRecord family_a(long n, long m, long k) {
    return construct({Family::A, n, m, k});
}

ConstructionRecord family_b(long n, long m, long k) {
    return construct({Family::B, n, m, k});
}

ConstructionRecord construct_m13() {
    const PlaneFixture fx = instantiate_m13();
    std::vector<SingularEvent> events = derive_census(fx.arrangement, fx.partition);
    const SingularityCensus census = bidouble_census(events);
    {
        SingularityCensus expect;
        expect.add(AdeType::E(7), 2);
        expect.add(AdeType::A(5), 2);
        expect.add(AdeType::A(1), 4);
        if (!(census == expect))
            throw Error("data", "census " + census.text() + " disagrees with " + expect.text());
    }
    BuildingData bd;
    bd.surface = BaseSurface::plane();
    bd.b1 = {plane_class(5), {"C", "la", "lb"}};
    bd.b2 = {plane_class(1), {"t2"}};
    bd.b3 = {plane_class(1), {"t3"}};
    bd.l1 = plane_class(1);
    bd.l2 = plane_class(3);
    bd.l3 = plane_class(3);
    bd.annotations = events;
    {
        auto v = validate_building_data(bd);
        if (!v.empty()) throw Error("data", "building data does not validate: " + v.front());
    }
    const SurfaceInvariants inv = bidouble_invariants(bd);
    if (!(inv == SurfaceInvariants(1, 3, 2, 0, 29)))
        throw Error("data", "cover invariants disagree with (K2,chi,pg) = (1,3,2)");
    if (!half_canonical_ample(bd)) throw Error("data", "2K_Y + B is not ample");
    Certificate cert = certify_maximal(census, 1, 0, inv.h11);
    return ConstructionRecord{"m13", std::nullopt, std::move(bd), census, inv, 1, IntMat{}, 0, cert};
}

ConstructionRecord construct_m76() {
    // the cover of F_1 with one elliptic singularity
    BuildingData y;
    y.surface = BaseSurface::hirzebruch(1);
    y.b1 = {hirzebruch_class(1, 0, 1), {"f_node"}};
    y.b2 = {hirzebruch_class(1, 0, 1), {"f_12"}};
    y.b3 = {hirzebruch_class(1, 6, 7), {"D0", "C0", "C1", "C2", "lt"}};
    y.l1 = hirzebruch_class(1, 3, 4);
    y.l2 = hirzebruch_class(1, 3, 4);
    y.l3 = hirzebruch_class(1, 0, 1);
    {
        auto v = validate_building_data(y);
        if (!v.empty()) throw Error("data", "intermediate building data: " + v.front());
    }
    const SurfaceInvariants yinv = bidouble_invariants(y);
    if (!(yinv.k2 == 8 && yinv.chi == 7 && yinv.pg == 6 && yinv.q == 0))
        throw Error("data", "intermediate invariants disagree with (8,7,6)");
    if (!half_canonical_ample(y)) throw Error("data", "intermediate 2K_Y + B is not ample");

    // resolved cover over the blow-up at the elliptic point: branch parts
    // acquire -3E, -E, +E
    BuildingData x;
    x.surface = BaseSurface::blownup_f1();
    x.b1 = {blowup_class(0, 1, -1), {"f_node"}};
    x.b2 = {blowup_class(0, 1, 1), {"f_12", "exc"}};
    x.b3 = {blowup_class(6, 7, -3), {"D0", "C0", "C1", "C2", "lt"}};
    x.l1 = blowup_class(3, 4, -1);
    x.l2 = blowup_class(3, 4, -2);
    x.l3 = blowup_class(0, 1, 0);
    {
        auto v = validate_building_data(x);
        if (!v.empty()) throw Error("data", "resolved building data: " + v.front());
    }
    const DivisorClass half = canonical_class(x.surface).scaled(2) + x.branch_total();
    if (!(half == blowup_class(2, 3, -1)))
        throw Error("data", "2K + B is " + half.text() + ", expected b*(2D0+3F) - E");
    if (intersect(half, half) != 7) throw Error("data", "K^2 of the resolved cover is not 7");
    // nef pairing identity: (b*(aD0+bF) - gE) . (b*(2D0+3F) - E) = a + 2b - g
    {
        const long samples[][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 5, 3}, {7, 1, 4}};
        for (const auto& s : samples)
            if (intersect(blowup_class(s[0], s[1], -s[2]), half) != Int(s[0]) + 2 * s[1] - s[2])
                throw Error("data", "nef pairing identity fails");
    }

    // ADE census of the resolved cover (the elliptic point resolves into the
    // extra configuration below, not into (-2)-curves)
    std::vector<SingularEvent> events;
    auto disjoint = [&](const std::string& pt, const AdeType& t) {
        events.push_back({pt, PartSet::of({Part::B3}), TransportRule::Disjoint, 0, t, false, true});
    };
    events.push_back({"P1", PartSet::of({Part::B2, Part::B3}), TransportRule::SingularPlusSmooth, 7,
                      AdeType::D(10), false, true});
    events.push_back({"P2", PartSet::of({Part::B2, Part::B3}), TransportRule::SingularPlusSmooth, 7,
                      AdeType::D(10), false, true});
    disjoint("T1", AdeType::A(3));
    disjoint("T2", AdeType::A(3));
    disjoint("R1", AdeType::A(1));
    disjoint("R2", AdeType::A(1));
    disjoint("lC0a", AdeType::A(1));
    disjoint("lC0b", AdeType::A(1));
    x.annotations = events;
    const SingularityCensus census = bidouble_census(events);
    {
        SingularityCensus expect;
        expect.add(AdeType::A(15), 2);
        expect.add(AdeType::A(3), 4);
        expect.add(AdeType::A(1), 8);
        if (!(census == expect))
            throw Error("data", "census " + census.text() + " disagrees with " + expect.text());
    }

    // the extra (-2)+elliptic configuration N, E1, E2 over the resolved point
    IntMat m{{-2, 1, 0}, {1, -1, 1}, {0, 1, -1}};
    const Int extra = matrix_rank(m);

    const SurfaceInvariants inv(7, 6, 5, 0, 53);
    Certificate cert = certify_maximal(census, 0, extra, inv.h11);
    if (!cert.maximal) throw Error("data", "certificate is not maximal: 50 + rank(M) != h11");
    return ConstructionRecord{"m76", std::nullopt, std::move(x), census, inv, 0, m, extra, cert};
}

std::vector<FamilyParams> parameter_grid(Family f, long bound) {
    std::vector<FamilyParams> grid;
    for (long n = 0; n <= bound; ++n)
        for (long m = 0; m <= bound; ++m)
            for (long k = 0; k <= bound; ++k) {
                FamilyParams p{f, n, m, k};
                try {
                    p.validate();
                } catch (const Error&) {
                    continue;
                }
                grid.push_back(p);
            }
    return grid;
}

}  // namespace rhomax
