#include "rhomax/covers.hpp"

#include <set>

namespace rhomax {

PartSet PartSet::of(std::initializer_list<Part> parts) {
    PartSet s;
    for (Part p : parts) s.insert(p);
    return s;
}

int PartSet::size() const {
    int n = 0;
    for (unsigned b = bits; b; b >>= 1) n += (b & 1);
    return n;
}

std::string PartSet::text() const {
    std::string s = "{";
    if (contains(Part::B1)) s += "B1";
    if (contains(Part::B2)) s += s.size() > 1 ? ",B2" : "B2";
    if (contains(Part::B3)) s += s.size() > 1 ? ",B3" : "B3";
    return s + "}";
}

std::vector<std::string> validate_event(const SingularEvent& e) {
    std::vector<std::string> v;
    if (e.membership.size() == 0) v.push_back("event '" + e.point + "' has empty membership");
    const int parts = e.membership.size();
    switch (e.rule) {
        case TransportRule::SmoothPair:
        case TransportRule::NodePlusSmooth:
        case TransportRule::SingularPlusSmooth:
        case TransportRule::CrossNode:
            if (parts != 2)
                v.push_back("event '" + e.point + "': rule " + to_string(e.rule) +
                            " needs exactly two parts, got " + e.membership.text());
            break;
        case TransportRule::Disjoint:
            if (parts != 1)
                v.push_back("event '" + e.point + "': rule disjoint needs exactly one part, got " +
                            e.membership.text());
            break;
        default:
            break;  // cyclic-stage rules carry no membership constraint
    }
    return v;
}

std::vector<std::string> validate_building_data(const BuildingData& bd) {
    std::vector<std::string> v;
    for (const auto* part : {&bd.b1, &bd.b2, &bd.b3})
        if (!(part->cls.surface == bd.surface)) v.push_back("branch class lives on the wrong surface");
    for (const auto* l : {&bd.l1, &bd.l2, &bd.l3})
        if (!(l->surface == bd.surface)) v.push_back("line bundle lives on the wrong surface");
    if (!v.empty()) return v;

    if (!(bd.l1.scaled(2) == bd.b2.cls + bd.b3.cls)) v.push_back("2L1 != B2 + B3");
    if (!(bd.l2.scaled(2) == bd.b1.cls + bd.b3.cls)) v.push_back("2L2 != B1 + B3");
    if (!(bd.l3 == bd.l1 + bd.l2 - bd.b3.cls)) v.push_back("L3 != L1 + L2 - B3");
    if (bd.l1.is_zero()) v.push_back("L1 is trivial");
    if (bd.l2.is_zero()) v.push_back("L2 is trivial");
    if (bd.l3.is_zero()) v.push_back("L3 is trivial");

    std::set<std::string> seen;
    for (const auto* part : {&bd.b1, &bd.b2, &bd.b3})
        for (const auto& label : part->components)
            if (!seen.insert(label).second)
                v.push_back("component '" + label + "' appears in two branch parts");

    for (const auto& e : bd.annotations)
        for (auto& msg : validate_event(e)) v.push_back(msg);
    return v;
}

SurfaceInvariants bidouble_invariants(const BuildingData& bd) {
    {
        auto violations = validate_building_data(bd);
        if (!violations.empty()) throw Error("data", "invalid building data: " + violations.front());
    }
    const DivisorClass ky = canonical_class(bd.surface);
    const DivisorClass half = ky.scaled(2) + bd.branch_total();
    const Int k2 = intersect(half, half);

    Int sum = 0;  // sum L_i (L_i + K_Y)
    for (const auto* l : {&bd.l1, &bd.l2, &bd.l3}) sum += intersect(*l, *l + ky);
    if (sum % 2 != 0)
        throw Error("data", "chi is not integral: sum L_i(L_i+K_Y) = " + str(sum) + " is odd");
    const Int chi = 4 * 1 + sum / 2;  // chi(O_Y) = 1 on all base surfaces here

    Int pg = 0;  // p_g(Y) = 0 on all base surfaces here
    for (const auto* l : {&bd.l1, &bd.l2, &bd.l3}) pg += h0(*l + ky);

    const Int q = 1 + pg - chi;
    if (q < 0) throw Error("data", "negative irregularity q = " + str(q));
    return SurfaceInvariants(k2, chi, pg, q, 10 * chi - k2 - 2 * q);
}

bool half_canonical_ample(const BuildingData& bd) {
    const DivisorClass half = canonical_class(bd.surface).scaled(2) + bd.branch_total();
    return positivity(half) == Positivity::Ample;
}

CyclicPullback cyclic_pullback(long e, long d, const DivisorClass& c, bool on_branch) {
    if (d < 1) throw Error("parameter", "cyclic cover degree must be >= 1");
    if (c.surface.kind != SurfaceKind::Hirzebruch)
        throw Error("unsupported_surface", "cyclic pullback is defined on Hirzebruch surfaces");
    if (c.surface.e != e) throw Error("lattice_mismatch", "class does not live on F_" + std::to_string(e));
    const Int &a = c.c[0], &b = c.c[1];
    if (on_branch) {
        if (!(a == 0 && b == 1))
            throw Error("shape", "only the reduced fiber class can be a cyclic branch fiber");
        return {hirzebruch_class(d * e, 0, 1), 1};
    }
    if (a == 0 && b == 1) return {hirzebruch_class(d * e, 0, d), d};  // splits into d fibers
    return {hirzebruch_class(d * e, a, d * b), 1};
}

std::pair<TransportRule, long> bidouble_rule_two_parts(const std::string& point,
                                                            const GermClass& part_a,
                                                            const GermClass& part_b,
                                                            const AdeType& u) {
    const bool sa = part_a.is(GermClass::Kind::Smooth), sb = part_b.is(GermClass::Kind::Smooth);
    if (sa && sb) {
        if (u == AdeType::A(1)) return {TransportRule::CrossNode, 0};
        if (u.letter == 'A' && u.index % 2 == 1) return {TransportRule::SmoothPair, (u.index - 1) / 2};
        throw Error("shape", "point '" + point + "': two smooth branch parts meet in " + u.label());
    }
    if (sa == sb)
        throw Error("shape", "point '" + point + "': both branch parts singular is unsupported");
    const GermClass& sing = sa ? part_b : part_a;
    if (!sing.is(GermClass::Kind::Ade) || sing.type->letter != 'A')
        throw Error("shape", "point '" + point + "': unsupported part germ " + sing.label());
    const long p = sing.type->index;
    if (p == 1 && u.letter == 'D' && u.index % 2 == 0 && u.index >= 4)
        return {TransportRule::NodePlusSmooth, (u.index - 4) / 2};
    if (u.letter == 'D' && u.index == p + 3) return {TransportRule::SingularPlusSmooth, p};
    throw Error("shape", "point '" + point + "': part " + sing.type->label() + " inside union " +
                             u.label() + " matches no rule");
}

std::vector<SingularEvent> cyclic_census_transport(const std::vector<SingularEvent>& events,
                                                   long d) {
    if (d < 1) throw Error("parameter", "cyclic cover degree must be >= 1");
    std::vector<SingularEvent> out;
    for (const auto& e : events) {
        if (e.on_branch_fiber) {
            if (e.type.letter != 'A' || e.type.index % 2 == 0 || !e.transversal)
                throw Error("shape", "event '" + e.point + "' of type " + e.type.label() +
                                         (e.transversal ? "" : " (non-transversal)") +
                                         " on a branch fiber leaves the ADE class");
            SingularEvent up = e;
            const long s = (e.type.index + 1) / 2;
            up.type = AdeType::A(2 * d * s - 1);
            up.rule = TransportRule::CyclicOnFiber;
            up.parameter = d;
            out.push_back(std::move(up));
        } else {
            for (long j = 1; j <= d; ++j) {
                SingularEvent up = e;
                up.point = e.point + "#" + std::to_string(j);
                up.rule = TransportRule::CyclicOffFiber;
                up.parameter = d;
                out.push_back(std::move(up));
            }
        }
    }
    return out;
}

}  // namespace rhomax
