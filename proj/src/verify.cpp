#include "rhomax/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "rhomax/geography.hpp"

namespace rhomax {

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

// --- 1, 2: certification grids -------------------------------------------

void check_family_grid(Family f) {
    const auto grid = parameter_grid(f, 6);
    require(!grid.empty(), "empty parameter grid");
    for (const auto& p : grid) {
        const ConstructionRecord r = construct(p);
        const SurfaceInvariants want = closed_form_invariants(p);
        std::ostringstream tag;
        tag << "(" << p.n << "," << p.m << "," << p.k << ")";
        require(r.invariants == want, "invariants mismatch at " + tag.str());
        require(r.invariants.q == 0, "q != 0 at " + tag.str());
        require(r.certificate.maximal, "certificate not maximal at " + tag.str());
        require(r.certificate.lower_bound == r.invariants.h11, "bound gap at " + tag.str());
    }
}

// --- 3: pipeline census vs closed form ------------------------------------

void check_pipeline_census() {
    for (Family f : {Family::A, Family::B}) {
        for (const auto& p : parameter_grid(f, 6)) {
            const SingularityCensus got = census_pipeline(p).census;
            const SingularityCensus want = closed_form_census(p);
            if (!(got == want)) {
                std::ostringstream os;
                os << "family " << to_string(f) << " (" << p.n << "," << p.m << "," << p.k
                   << "): pipeline " << got.text() << " vs closed form " << want.text();
                throw Failure(os.str());
            }
        }
    }
    // D3 -> A3 normalization at (n,k) = (0,1)
    const SingularityCensus c = closed_form_census({Family::A, 0, 1, 1});
    require(c.count(AdeType::A(3)) == 3, "expected three A3 at (0,1,1) after D3 normalization");
    require(c.count(AdeType::D(4)) == 6, "expected six D4 at (0,1,1)");
}

// --- 4: coordinate oracle --------------------------------------------------

struct ExpectedEvent {
    TransportRule rule;
    AdeType type;
};

void match_events(const std::string& tag, const std::vector<SingularEvent>& events,
                  const std::map<std::string, ExpectedEvent>& expect) {
    std::map<std::string, const SingularEvent*> got;
    for (const auto& e : events) got[e.point] = &e;
    require(got.size() == events.size(), tag + ": duplicate event points");
    for (const auto& [point, want] : expect) {
        auto it = got.find(point);
        require(it != got.end(), tag + ": missing event at " + point);
        require(it->second->rule == want.rule,
                tag + " at " + point + ": rule " + to_string(it->second->rule));
        require(it->second->type == want.type,
                tag + " at " + point + ": type " + it->second->type.label() + ", expected " +
                    want.type.label());
    }
    for (const auto& [point, e] : got)
        require(expect.count(point), tag + ": unexpected event at " + point);
}

void check_coordinate_oracle() {
    const AdeType A1 = AdeType::A(1), A3 = AdeType::A(3), A5 = AdeType::A(5), E7 = AdeType::E(7);
    {
        const PlaneFixture fx = instantiate_m13();
        auto events = derive_census(fx.arrangement, fx.partition);
        match_events("m13", events,
                     {{"cusp", {TransportRule::Disjoint, E7}},
                      {"node", {TransportRule::Disjoint, A1}},
                      {"infl", {TransportRule::Disjoint, A5}},
                      {"P2", {TransportRule::SmoothPair, A3}},
                      {"P3", {TransportRule::SmoothPair, A3}},
                      {"S2", {TransportRule::CrossNode, A1}},
                      {"S3", {TransportRule::CrossNode, A1}},
                      {"A2a", {TransportRule::CrossNode, A1}},
                      {"A2b", {TransportRule::CrossNode, A1}},
                      {"A3a", {TransportRule::CrossNode, A1}},
                      {"A3b", {TransportRule::CrossNode, A1}},
                      {"X23", {TransportRule::CrossNode, A1}}});
        const SingularityCensus census = bidouble_census(events);
        SingularityCensus want;
        want.add(E7, 2);
        want.add(A5, 2);
        want.add(A1, 4);
        require(census == want, "m13 census " + census.text());
    }
    {
        const PlaneFixture fx = instantiate_family_a();
        auto events = derive_census(fx.arrangement, fx.section_partition);
        match_events("family A sections", events,
                     {{"P1", {TransportRule::Disjoint, A1}},
                      {"P2", {TransportRule::Disjoint, A1}},
                      {"P3", {TransportRule::Disjoint, A1}},
                      {"P4", {TransportRule::CrossNode, A1}},
                      {"P5", {TransportRule::CrossNode, A1}},
                      {"P6", {TransportRule::CrossNode, A1}}});
    }
    {
        const PlaneFixture fx = instantiate_family_b();
        auto events = derive_census(fx.arrangement, fx.section_partition);
        match_events("family B sections", events,
                     {{"P1", {TransportRule::Disjoint, A3}},
                      {"P2", {TransportRule::Disjoint, A3}},
                      {"P3", {TransportRule::SmoothPair, A3}},
                      {"P4", {TransportRule::CrossNode, A1}},
                      {"P5", {TransportRule::Disjoint, A1}},
                      {"T13", {TransportRule::CrossNode, A1}}});
    }
}

// --- 5: fixed cases ---------------------------------------------------------

void check_fixed_cases() {
    {
        const ConstructionRecord r = construct_m13();
        require(r.invariants.h11 == 29, "m13 h11 != 29");
        require(r.certificate.lower_bound == 29 && r.certificate.maximal, "m13 certificate");
        require(r.independent_divisors == 1, "m13 base divisor count");
    }
    {
        const ConstructionRecord r = construct_m76();
        require(r.extra_rank == 3, "m76 rank(M) != 3");
        require(r.certificate.census_rank == 50, "m76 census rank != 50");
        require(r.invariants.h11 == 53 && r.invariants.h11 == 10 * r.invariants.chi - r.invariants.k2,
                "m76 h11 != 10*6-7");
        require(r.certificate.lower_bound == 53 && r.certificate.maximal, "m76 certificate");
        require(matrix_rank(r.extra_matrix) == 3, "rank of M");
    }
}

// --- 6: geography equivalence ----------------------------------------------

void check_geography_equivalence() {
    for (long chi = 1; chi <= 500; ++chi) {
        const long lo = std::max<long>(1, 2 * chi - 6), hi = 9 * chi;
        for (long k2 = lo; k2 <= hi; ++k2) {
            const Int K2 = k2, Chi = chi;
            const bool region = in_theorem_region(K2, Chi);
            const Int k = K2 - (2 * Chi - 6);
            const bool exists_form = k >= 0 && Chi >= 2 * k + 10;
            if (region != exists_form) {
                std::ostringstream os;
                os << "region characterizations disagree at (" << k2 << "," << chi << ")";
                throw Failure(os.str());
            }
            if (region) {
                const FamilyParams p = solve_family_a(K2, Chi);
                const SurfaceInvariants inv = closed_form_invariants(p);
                require(inv.k2 == K2 && inv.chi == Chi, "solver round trip failed");
            }
        }
    }
}

// --- 7: density --------------------------------------------------------------

void check_density() {
    for (const char* qs : {"21/10", "9/4", "12/5", "49/20"}) {
        const Rat q = parse_rational(qs);
        const DensityWitness w = density_witness(q);
        require(in_theorem_region(w.k2, w.chi), std::string(qs) + ": witness outside region");
        require(Rat(w.k2) / Rat(w.chi) == q, std::string(qs) + ": ratio is not exact");
    }
    const DensityWitness w = density_witness(Rat(9, 4));
    require(w.k2 == 99 && w.chi == 44 && w.lambda == 11, "9/4 witness is not (99,44) with lambda 11");
    bool rejected = false;
    try {
        density_witness(Rat(5, 2));
    } catch (const Error&) {
        rejected = true;
    }
    require(rejected, "q = 5/2 must be rejected (open interval)");
}

// --- 8: Horikawa coverage -----------------------------------------------------

void check_horikawa() {
    for (long chi = 4; chi <= 200; ++chi) {
        const CoverageVerdict v = horikawa_coverage(chi, HorikawaLine::Even);
        require(v.source != CoverageSource::Open,
                "even line open at chi = " + std::to_string(chi));
    }
    for (long chi = 3; chi <= 200; ++chi) {
        const CoverageVerdict v = horikawa_coverage(chi, HorikawaLine::Odd);
        if (chi == 8)
            require(v.source == CoverageSource::Open, "odd line chi=8 must be open");
        else
            require(v.source != CoverageSource::Open,
                    "odd line open at chi = " + std::to_string(chi));
    }
    const CoverageVerdict v11 = horikawa_coverage(11, HorikawaLine::Odd);
    require(v11.source == CoverageSource::FamilyB && v11.k2 == 17,
            "odd chi=11 must come from family B at K2 = 17");
}

// --- 9: germ classifier -------------------------------------------------------

Poly2 ade_normal_form(const AdeType& t) {
    const Poly2 x = Poly2::var_x(), y = Poly2::var_y();
    auto pow = [](const Poly2& p, long e) {
        Poly2 r{Rat(1)};
        for (long i = 0; i < e; ++i) r = r * p;
        return r;
    };
    if (t.letter == 'A') return x * x + pow(y, t.index + 1);
    if (t.letter == 'D') return y * (x * x + pow(y, t.index - 2));
    if (t.index == 6) return x * x * x + pow(y, 4);
    if (t.index == 7) return x * x * x + x * pow(y, 3);
    return x * x * x + pow(y, 5);
}

// random unimodular rational change of coordinates, built from elementary
// shears and a diagonal q, 1/q twist
std::array<Rat, 4> random_unimodular(std::mt19937_64& rng) {
    Rat a = 1, b = 0, c = 0, d = 1;
    auto rmul = [&](Rat m00, Rat m01, Rat m10, Rat m11) {
        const Rat na = a * m00 + b * m10, nb = a * m01 + b * m11;
        const Rat nc = c * m00 + d * m10, nd = c * m01 + d * m11;
        a = na, b = nb, c = nc, d = nd;
    };
    std::uniform_int_distribution<int> shear(-2, 2);
    std::uniform_int_distribution<int> steps(2, 4);
    std::uniform_int_distribution<int> coin(0, 2);
    const int nsteps = steps(rng);
    for (int i = 0; i < nsteps; ++i) {
        const int t = shear(rng);
        if (coin(rng) == 0)
            rmul(1, t, 0, 1);
        else
            rmul(1, 0, t, 1);
    }
    const int q = coin(rng);  // 0 -> identity, 1 -> (2, 1/2), 2 -> (1/2, 2)
    if (q == 1) rmul(2, 0, 0, Rat(1, 2));
    if (q == 2) rmul(Rat(1, 2), 0, 0, 2);
    return {a, b, c, d};
}

void check_germ_classifier() {
    std::vector<AdeType> forms;
    for (long n = 1; n <= 12; ++n) forms.push_back(AdeType::A(n));
    for (long n = 4; n <= 12; ++n) forms.push_back(AdeType::D(n));
    for (long n : {6, 7, 8}) forms.push_back(AdeType::E(n));

    for (const auto& t : forms) {
        const Poly2 nf = ade_normal_form(t);
        const Germ g = Germ::of(nf);
        const MilnorResult mu = milnor_number(g);
        require(mu.isolated && mu.mu == t.rank(),
                t.label() + ": milnor number " + (mu.isolated ? str(mu.mu) : "infinite"));
        const GermClass base = classify_germ(g);
        require(base == GermClass::ade(t), t.label() + ": classified " + base.label());

        std::mt19937_64 rng(0xADE0000 + 64 * t.index + t.letter);
        for (int trial = 0; trial < 20; ++trial) {
            const auto [a, b, c, d] = random_unimodular(rng);
            const GermClass got = classify_germ(Germ::of(nf.linear_subst(a, b, c, d)));
            require(got == GermClass::ade(t),
                    t.label() + " trial " + std::to_string(trial) + ": classified " + got.label());
        }
    }

    // the three local equations of the bidouble branch analysis, as
    // double-point surface germs z^2 = f
    const Poly2 x = Poly2::var_x(), y = Poly2::var_y();
    auto pow = [](const Poly2& p, long e) {
        Poly2 r{Rat(1)};
        for (long i = 0; i < e; ++i) r = r * p;
        return r;
    };
    for (long n = 1; n <= 5; ++n) {
        const GermClass i = classify_double_point_surface(Germ::of(x * x + pow(y, n + 1).scaled(2)));
        require(i == GermClass::ade(AdeType::A(n)), "case i, n=" + std::to_string(n));
        const GermClass ii =
            classify_double_point_surface(Germ::of(y * (x * x - pow(y, n + 1).scaled(2))));
        require(ii == GermClass::ade(AdeType::D(n + 3)), "case ii, n=" + std::to_string(n));
        const GermClass iii = classify_double_point_surface(Germ::of(x * x + pow(y, 2 * n + 2)));
        require(iii == GermClass::ade(AdeType::A(2 * n + 1)), "case iii, n=" + std::to_string(n));
    }
    const GermClass smooth = classify_germ(Germ::parse("x^2 - y^2 - 2*y"));
    require(smooth == GermClass::smooth(), "transversal-node cover chart must be smooth");
}

// --- 10: extra-case tables -----------------------------------------------------

void check_extra_case_tables() {
    for (const auto& row : extra_case_tables()) {
        const ConstructionRecord r = construct({row.family, row.n, row.m, row.k});
        std::ostringstream tag;
        tag << to_string(row.family) << " (" << row.k2 << "," << row.chi << ")";
        require(r.invariants.k2 == row.k2 && r.invariants.chi == row.chi,
                tag.str() + ": invariants do not match the table");
        require(r.certificate.maximal, tag.str() + ": not maximal");
        const Int noether = 2 * r.invariants.chi - 6;
        require(row.line == HorikawaLine::Even ? r.invariants.k2 == noether
                                               : r.invariants.k2 == noether + 1,
                tag.str() + ": row is on the wrong line");
    }
}

// --- 11: h0 oracle ---------------------------------------------------------------

void check_h0_oracle() {
    for (long e = 0; e <= 4; ++e)
        for (long a = 0; a <= 6; ++a)
            for (long b = 0; b <= 12; ++b) {
                // brute force count of monomials x^i y^j z^kk w^l with
                // deg x = deg y = (0,1), deg z = (1,0), deg w = (1,e)
                Int count = 0;
                for (long kk = 0; kk <= a; ++kk)
                    for (long l = 0; l <= a; ++l)
                        for (long i = 0; i <= b; ++i)
                            for (long j = 0; j <= b; ++j)
                                if (kk + l == a && i + j + e * l == b) ++count;
                const Int closed = h0(hirzebruch_class(e, a, b));
                if (closed != count) {
                    std::ostringstream os;
                    os << "h0 mismatch on F_" << e << " at (" << a << "," << b << "): closed "
                       << closed.get_str() << ", oracle " << count.get_str();
                    throw Failure(os.str());
                }
            }
}

}  // namespace

VerifyReport verify_paper(const std::string& only) {
    using Clock = std::chrono::steady_clock;
    const std::vector<std::pair<std::string, std::function<void()>>> checks = {
        {"family_a_grid", [] { check_family_grid(Family::A); }},
        {"family_b_grid", [] { check_family_grid(Family::B); }},
        {"pipeline_census", check_pipeline_census},
        {"coordinate_oracle", check_coordinate_oracle},
        {"fixed_cases", check_fixed_cases},
        {"geography_equivalence", check_geography_equivalence},
        {"density_witnesses", check_density},
        {"horikawa_coverage", check_horikawa},
        {"germ_classifier", check_germ_classifier},
        {"extra_case_tables", check_extra_case_tables},
        {"h0_oracle", check_h0_oracle},
    };
    VerifyReport report;
    for (const auto& [name, fn] : checks) {
        if (!only.empty() && name.find(only) == std::string::npos) continue;
        CheckResult r;
        r.name = name;
        const auto t0 = Clock::now();
        try {
            fn();
            r.pass = true;
        } catch (const Failure& f) {
            r.pass = false;
            r.message = f.what();
        } catch (const Error& e) {
            r.pass = false;
            r.message = std::string("[") + e.kind + "] " + e.what();
        } catch (const std::exception& e) {
            r.pass = false;
            r.message = e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report.all_pass = report.all_pass && r.pass;
        report.checks.push_back(std::move(r));
    }
    if (report.checks.empty())
        throw Error("parameter", "no verification check matches '" + only + "'");
    return report;
}

}  // namespace rhomax
