#include "rhomax/geography.hpp"

#include <thread>

namespace rhomax {

bool is_admissible(const Int& k2, const Int& chi) {
    return k2 >= 1 && chi >= 1 && k2 >= 2 * chi - 6 && k2 <= 9 * chi;
}

bool in_theorem_region(const Int& k2, const Int& chi) {
    return is_admissible(k2, chi) && 2 * k2 <= 5 * chi - 22;
}

namespace {

FamilyParams checked(FamilyParams p, const Int& k2, const Int& chi) {
    p.validate();
    const SurfaceInvariants inv = closed_form_invariants(p);
    if (inv.k2 != k2 || inv.chi != chi)
        throw Error("internal", "solver round trip failed for (" + str(k2) + "," + str(chi) + ")");
    return p;
}

}  // namespace

FamilyParams solve_family_a(const Int& k2, const Int& chi) {
    if (!in_theorem_region(k2, chi))
        throw Error("domain", "(" + str(k2) + "," + str(chi) + ") is outside the theorem region");
    const Int k = k2 - (2 * chi - 6);
    const Int t = chi - (2 * k + 1);  // >= 9 in the region
    Int a = t / 3, b = t % 3;
    if ((b - k) % 2 != 0) {
        a -= 1;
        b += 3;
    }
    return checked({Family::A, to_ll(a), to_ll(b), to_ll(k)}, k2, chi);
}

FamilyParams solve_family_b(const Int& k2, const Int& chi) {
    const Int k = k2 - (2 * chi - 6);
    if (k < 0) throw Error("domain", "pair below the Noether line");
    if (chi < 3 * k + 25)
        throw Error("domain", "family B solver needs chi >= 3k+25, got chi = " + str(chi) +
                                  " with k = " + str(k));
    const Int t = chi - (3 * k + 1);  // >= 24
    Int n = t / 5;
    if ((t - 5 * n) % 2 != 0) n -= 1;
    const Int b = t - 5 * n;  // in {0,2,4,6,8}
    return checked({Family::B, to_ll(n), to_ll(k + b), to_ll(k)}, k2, chi);
}

DensityWitness density_witness(const Rat& q) {
    if (!(q > 2 && q < Rat(5, 2)))
        throw Error("domain", "q = " + q.get_str() + " is not in the open interval (2, 5/2)");
    Rat r = q - 2;
    r.canonicalize();
    DensityWitness w;
    w.q = q;
    w.a = r.get_num();
    w.b = r.get_den();
    w.delta = w.b - 2 * w.a;  // positive on the interval
    w.lambda = (22 + w.delta - 1) / w.delta;
    w.chi = w.b * w.lambda;
    w.k2 = (w.a + 2 * w.b) * w.lambda;
    if (!in_theorem_region(w.k2, w.chi) || Rat(w.k2) / Rat(w.chi) != q)
        throw Error("internal", "density witness postcondition failed for q = " + q.get_str());
    return w;
}

std::string to_string(HorikawaLine l) { return l == HorikawaLine::Even ? "even" : "odd"; }

std::string to_string(CoverageSource s) {
    switch (s) {
        case CoverageSource::FamilyA: return "family_a";
        case CoverageSource::FamilyB: return "family_b";
        case CoverageSource::LemmaM13: return "lemma_m13";
        case CoverageSource::LemmaM55External: return "lemma_m55_external";
        case CoverageSource::LemmaM76: return "lemma_m76";
        case CoverageSource::PerssonExternal: return "persson_external";
        case CoverageSource::Open: return "open";
    }
    return "?";
}

CoverageVerdict horikawa_coverage(const Int& chi, HorikawaLine line) {
    const Int k2 = line == HorikawaLine::Even ? 2 * chi - 6 : 2 * chi - 5;
    if (!is_admissible(k2, chi))
        throw Error("domain", "no admissible pair with chi = " + str(chi) + " on the " +
                                  to_string(line) + " line");
    CoverageVerdict v;
    v.chi = chi;
    v.k2 = k2;
    v.line = line;

    auto family_a_case = [&](long n, long m, long k) {
        v.source = CoverageSource::FamilyA;
        v.params = checked({Family::A, n, m, k}, k2, chi);
    };

    if (line == HorikawaLine::Even) {
        if (chi >= 12) {
            v.source = CoverageSource::FamilyA;
            v.params = solve_family_a(k2, chi);
        } else if (chi == 6) {
            family_a_case(1, 2, 0);
        } else if (chi == 7) {
            family_a_case(2, 0, 0);
        } else if (chi == 9) {
            family_a_case(2, 2, 0);
        } else {
            v.source = CoverageSource::PerssonExternal;  // chi in {4,5,8,10,11}, all != 0 mod 6
        }
        if (chi % 6 != 0 && v.source != CoverageSource::PerssonExternal)
            v.also.push_back(CoverageSource::PerssonExternal);
        return v;
    }

    if (chi == 3) {
        v.source = CoverageSource::LemmaM13;
    } else if (chi == 4) {
        family_a_case(0, 1, 1);
    } else if (chi == 5) {
        v.source = CoverageSource::LemmaM55External;
    } else if (chi == 6) {
        v.source = CoverageSource::LemmaM76;
    } else if (chi == 7) {
        family_a_case(1, 1, 1);
    } else if (chi == 8) {
        v.source = CoverageSource::Open;
    } else if (chi == 9) {
        family_a_case(1, 3, 1);
    } else if (chi == 10) {
        family_a_case(2, 1, 1);
    } else if (chi == 11) {
        v.source = CoverageSource::FamilyB;
        v.params = checked({Family::B, 1, 3, 1}, k2, chi);
    } else {
        v.source = CoverageSource::FamilyA;
        v.params = solve_family_a(k2, chi);
    }
    return v;
}

const std::vector<ExtraCaseRow>& extra_case_tables() {
    static const std::vector<ExtraCaseRow> rows = {
        // family A on the Noether line
        {HorikawaLine::Even, Family::A, 6, 6, 1, 2, 0},
        {HorikawaLine::Even, Family::A, 8, 7, 2, 0, 0},
        {HorikawaLine::Even, Family::A, 12, 9, 2, 2, 0},
        // family A one above
        {HorikawaLine::Odd, Family::A, 3, 4, 0, 1, 1},
        {HorikawaLine::Odd, Family::A, 9, 7, 1, 1, 1},
        {HorikawaLine::Odd, Family::A, 13, 9, 1, 3, 1},
        {HorikawaLine::Odd, Family::A, 15, 10, 2, 1, 1},
        // family B on the Noether line
        {HorikawaLine::Even, Family::B, 6, 6, 1, 0, 0},
        {HorikawaLine::Even, Family::B, 10, 8, 1, 2, 0},
        {HorikawaLine::Even, Family::B, 16, 11, 2, 0, 0},
        {HorikawaLine::Even, Family::B, 20, 13, 2, 2, 0},
        {HorikawaLine::Even, Family::B, 24, 15, 2, 4, 0},
        {HorikawaLine::Even, Family::B, 26, 16, 3, 0, 0},
        {HorikawaLine::Even, Family::B, 30, 18, 3, 2, 0},
        {HorikawaLine::Even, Family::B, 34, 20, 3, 4, 0},
        {HorikawaLine::Even, Family::B, 36, 21, 4, 0, 0},
        {HorikawaLine::Even, Family::B, 38, 22, 3, 6, 0},
        {HorikawaLine::Even, Family::B, 40, 23, 4, 2, 0},
        // family B one above
        {HorikawaLine::Odd, Family::B, 3, 4, 0, 1, 1},
        {HorikawaLine::Odd, Family::B, 13, 9, 1, 1, 1},
        {HorikawaLine::Odd, Family::B, 17, 11, 1, 3, 1},
        {HorikawaLine::Odd, Family::B, 23, 14, 2, 1, 1},
        {HorikawaLine::Odd, Family::B, 27, 16, 2, 3, 1},
        {HorikawaLine::Odd, Family::B, 31, 18, 2, 5, 1},
        {HorikawaLine::Odd, Family::B, 33, 19, 3, 1, 1},
        {HorikawaLine::Odd, Family::B, 37, 21, 3, 3, 1},
        {HorikawaLine::Odd, Family::B, 41, 23, 3, 5, 1},
        {HorikawaLine::Odd, Family::B, 43, 24, 4, 1, 1},
        {HorikawaLine::Odd, Family::B, 45, 25, 3, 7, 1},
        {HorikawaLine::Odd, Family::B, 47, 26, 4, 3, 1},
    };
    return rows;
}

namespace {

std::vector<SweepRow> sweep_range(long chi_from, long chi_to) {
    std::vector<SweepRow> rows;
    for (long chi = chi_from; chi <= chi_to; ++chi) {
        const Int lo = std::max(Int(1), Int(2 * chi - 6));
        const Int hi = Int(9) * chi;
        for (Int k2 = lo; k2 <= hi; ++k2) {
            SweepRow r;
            r.chi = chi;
            r.k2 = k2;
            r.admissible = true;
            r.in_region = in_theorem_region(k2, chi);
            if (r.in_region) {
                r.params = solve_family_a(k2, chi);
                r.h11 = closed_form_invariants(*r.params).h11;
            }
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> sweep(long max_chi, int parallelism) {
    if (max_chi < 1) throw Error("parameter", "sweep needs max_chi >= 1");
    if (parallelism <= 1 || max_chi < 8) return sweep_range(1, max_chi);
    const int workers = std::min<long>(parallelism, (max_chi + 7) / 8);
    std::vector<std::vector<SweepRow>> parts(workers);
    std::vector<std::thread> threads;
    const long per = (max_chi + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long from = 1 + w * per;
        const long to = std::min<long>(max_chi, (w + 1) * per);
        threads.emplace_back([&parts, w, from, to] {
            if (from <= to) parts[w] = sweep_range(from, to);
        });
    }
    for (auto& t : threads) t.join();
    std::vector<SweepRow> rows;
    for (auto& p : parts)
        for (auto& r : p) rows.push_back(std::move(r));
    return rows;
}

}  // namespace rhomax
