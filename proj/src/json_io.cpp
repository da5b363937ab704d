#include "rhomax/json_io.hpp"

#include <sstream>

namespace rhomax {

Json json_int(const Int& v) {
    if (fits_int64(v)) return Json(std::stoll(v.get_str()));
    return Json(v.get_str());
}

Json to_json(const SurfaceInvariants& inv) {
    return Json{{"k2", json_int(inv.k2)},
                {"chi", json_int(inv.chi)},
                {"pg", json_int(inv.pg)},
                {"q", json_int(inv.q)},
                {"h11", json_int(inv.h11)}};
}

Json to_json(const SingularityCensus& c) {
    Json j = Json::object();
    for (const auto& [t, n] : c.counts()) j[t.label()] = json_int(n);
    return j;
}

Json to_json(const DivisorClass& d) {
    Json coeffs = Json::array();
    for (const auto& c : d.c) coeffs.push_back(json_int(c));
    return Json{{"surface", d.surface.name()}, {"coefficients", coeffs}, {"text", d.text()}};
}

Json to_json(const SingularEvent& e) {
    Json j{{"point", e.point},
           {"membership", e.membership.text()},
           {"rule", to_string(e.rule)},
           {"parameter", e.parameter},
           {"type", e.type.label()}};
    if (e.on_branch_fiber) j["on_branch_fiber"] = true;
    return j;
}

Json to_json(const BuildingData& bd) {
    auto part = [](const BranchPart& p) {
        return Json{{"class", to_json(p.cls)}, {"components", p.components}};
    };
    Json events = Json::array();
    for (const auto& e : bd.annotations) events.push_back(to_json(e));
    return Json{{"surface", bd.surface.name()}, {"b1", part(bd.b1)},   {"b2", part(bd.b2)},
                {"b3", part(bd.b3)},            {"l1", to_json(bd.l1)}, {"l2", to_json(bd.l2)},
                {"l3", to_json(bd.l3)},         {"singular_events", events}};
}

Json to_json(const Certificate& c) {
    return Json{{"census_rank", json_int(c.census_rank)},
                {"independent_divisors", json_int(c.independent_divisors)},
                {"extra_rank", json_int(c.extra_rank)},
                {"lower_bound", json_int(c.lower_bound)},
                {"h11", json_int(c.h11)},
                {"maximal", c.maximal}};
}

Json to_json(const ConstructionRecord& r) {
    Json j;
    j["family"] = r.name;
    if (r.params)
        j["params"] = Json{{"n", r.params->n}, {"m", r.params->m}, {"k", r.params->k}};
    j["surface"] = r.data.surface.name();
    j["building_data"] = to_json(r.data);
    j["census"] = to_json(r.census);
    j["invariants"] = to_json(r.invariants);
    j["rank_breakdown"] = Json{{"census_rank", json_int(r.certificate.census_rank)},
                               {"independent_divisors", json_int(r.independent_divisors)},
                               {"extra_rank", json_int(r.extra_rank)}};
    j["certificate"] = to_json(r.certificate);
    j["maximal"] = r.certificate.maximal;
    return j;
}

Json to_json(const DensityWitness& w) {
    return Json{{"q", w.q.get_str()},          {"a", json_int(w.a)},
                {"b", json_int(w.b)},          {"delta", json_int(w.delta)},
                {"lambda", json_int(w.lambda)}, {"k2", json_int(w.k2)},
                {"chi", json_int(w.chi)}};
}

Json to_json(const CoverageVerdict& v) {
    Json j{{"chi", json_int(v.chi)},
           {"k2", json_int(v.k2)},
           {"line", to_string(v.line)},
           {"source", to_string(v.source)}};
    if (v.params)
        j["params"] = Json{{"family", to_string(v.params->family)},
                           {"n", v.params->n},
                           {"m", v.params->m},
                           {"k", v.params->k}};
    if (!v.also.empty()) {
        Json also = Json::array();
        for (auto s : v.also) also.push_back(to_string(s));
        j["also"] = also;
    }
    return j;
}

Json to_json(const GermClass& g) { return Json{{"verdict", g.label()}}; }

// ---------------------------------------------------------------------------
// arrangement dumps
// ---------------------------------------------------------------------------

namespace {

std::string mon_key(const Mon3& m) {
    return std::to_string(m.a) + "," + std::to_string(m.b) + "," + std::to_string(m.c);
}

Mon3 parse_mon_key(const std::string& s) {
    Mon3 m;
    if (std::sscanf(s.c_str(), "%d,%d,%d", &m.a, &m.b, &m.c) != 3)
        throw Error("parse", "bad monomial key '" + s + "'");
    return m;
}

std::string part_name(Part p) {
    switch (p) {
        case Part::B1: return "B1";
        case Part::B2: return "B2";
        case Part::B3: return "B3";
    }
    return "?";
}

Part parse_part(const std::string& s) {
    if (s == "B1") return Part::B1;
    if (s == "B2") return Part::B2;
    if (s == "B3") return Part::B3;
    throw Error("parse", "bad branch part '" + s + "'");
}

}  // namespace

Json to_json(const Arrangement& a, const BranchAssignment& partition) {
    Json curves = Json::object();
    for (const auto& [label, c] : a.curves) {
        Json mons = Json::object();
        for (const auto& [m, coef] : c.f.terms()) mons[mon_key(m)] = coef.get_str();
        curves[label] = Json{{"degree", c.degree}, {"monomials", mons}, {"equation", c.f.text()}};
    }
    Json points = Json::object();
    for (const auto& [label, p] : a.points)
        points[label] = Json::array({p.v[0].get_str(), p.v[1].get_str(), p.v[2].get_str()});
    Json on = Json::array(), off = Json::array(), contacts = Json::array();
    for (const auto& [p, c] : a.on) on.push_back(Json::array({p, c}));
    for (const auto& [p, c] : a.off) off.push_back(Json::array({p, c}));
    for (const auto& ct : a.contacts)
        contacts.push_back(Json{{"c1", ct.c1}, {"c2", ct.c2}, {"point", ct.point},
                                {"order", json_int(ct.order)}});
    Json sing = Json::object();
    for (const auto& [label, pts] : a.component_singular) {
        Json list = Json::array();
        for (const auto& [pl, t] : pts) list.push_back(Json::array({pl, t.label()}));
        sing[label] = list;
    }
    Json parts = Json::object();
    for (const auto& [label, p] : partition) parts[label] = part_name(p);
    return Json{{"curves", curves}, {"points", points},   {"on", on},
                {"off", off},       {"contacts", contacts}, {"component_singular", sing},
                {"partition", parts}};
}

ArrangementDump arrangement_from_json(const Json& j) {
    ArrangementDump d;
    for (const auto& [label, cj] : j.at("curves").items()) {
        Poly3 f;
        for (const auto& [mk, coef] : cj.at("monomials").items()) {
            Mon3 m = parse_mon_key(mk);
            f.set(m.a, m.b, m.c, parse_rational(coef.get<std::string>()));
        }
        d.arrangement.curves.emplace(label, PlaneCurve::of(std::move(f)));
    }
    for (const auto& [label, pj] : j.at("points").items()) {
        d.arrangement.points.emplace(
            label, ProjTriple::of(parse_rational(pj.at(0).get<std::string>()),
                                  parse_rational(pj.at(1).get<std::string>()),
                                  parse_rational(pj.at(2).get<std::string>())));
    }
    for (const auto& e : j.value("on", Json::array()))
        d.arrangement.on.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    for (const auto& e : j.value("off", Json::array()))
        d.arrangement.off.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    for (const auto& e : j.value("contacts", Json::array()))
        d.arrangement.contacts.push_back({e.at("c1").get<std::string>(),
                                          e.at("c2").get<std::string>(),
                                          e.at("point").get<std::string>(),
                                          Int(e.at("order").get<long>())});
    if (j.contains("component_singular"))
        for (const auto& [label, list] : j.at("component_singular").items()) {
            std::vector<std::pair<std::string, AdeType>> pts;
            for (const auto& e : list)
                pts.emplace_back(e.at(0).get<std::string>(),
                                 AdeType::parse(e.at(1).get<std::string>()));
            d.arrangement.component_singular[label] = std::move(pts);
        }
    if (j.contains("partition"))
        for (const auto& [label, p] : j.at("partition").items())
            d.partition[label] = parse_part(p.get<std::string>());
    return d;
}

Json sweep_to_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json j{{"chi", json_int(r.chi)},
               {"k2", json_int(r.k2)},
               {"admissible", r.admissible},
               {"in_region", r.in_region}};
        if (r.params) {
            j["family"] = to_string(r.params->family);
            j["n"] = r.params->n;
            j["m"] = r.params->m;
            j["k"] = r.params->k;
            j["h11"] = json_int(r.h11);
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "chi,k2,admissible,in_region,family,n,m,k,h11\n";
    for (const auto& r : rows) {
        os << r.chi.get_str() << "," << r.k2.get_str() << "," << (r.admissible ? 1 : 0) << ","
           << (r.in_region ? 1 : 0) << ",";
        if (r.params)
            os << to_string(r.params->family) << "," << r.params->n << "," << r.params->m << ","
               << r.params->k << "," << r.h11.get_str();
        else
            os << ",,,,";
        os << "\n";
    }
    return os.str();
}

}  // namespace rhomax
