#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhomax/constructions.hpp"

namespace rhomax {

// Admissible pair: K^2 >= 1, chi >= 1, Noether K^2 >= 2chi-6, BMY K^2 <= 9chi.
bool is_admissible(const Int& k2, const Int& chi);

// Admissible and 2 K^2 <= 5 chi - 22; equivalently K^2 = 2chi-6+k for some
// k >= 0 with chi >= 2k+10.
bool in_theorem_region(const Int& k2, const Int& chi);

// Inverts the closed forms on the theorem region: k = K^2 - (2chi-6), then
// chi-(2k+1) = 3a+b with a >= 3, b in {0,1,2}, adjusted for parity.
FamilyParams solve_family_a(const Int& k2, const Int& chi);

// Family-B solver; needs k = K^2-(2chi-6) >= 0 and chi >= 3k+25.
FamilyParams solve_family_b(const Int& k2, const Int& chi);

// Witness pair with K^2/chi exactly q, for rational q in (2, 5/2).
struct DensityWitness {
    Rat q;
    Int a, b, delta, lambda, k2, chi;
};
DensityWitness density_witness(const Rat& q);

enum class HorikawaLine { Even, Odd };  // K^2 = 2chi-6 resp. 2chi-5

enum class CoverageSource {
    FamilyA,
    FamilyB,
    LemmaM13,
    LemmaM55External,
    LemmaM76,
    PerssonExternal,
    Open,
};

std::string to_string(HorikawaLine l);
std::string to_string(CoverageSource s);

struct CoverageVerdict {
    Int chi, k2;
    HorikawaLine line = HorikawaLine::Even;
    CoverageSource source = CoverageSource::Open;
    std::optional<FamilyParams> params;    // for the family sources
    std::vector<CoverageSource> also;      // secondary sources
};

CoverageVerdict horikawa_coverage(const Int& chi, HorikawaLine line);

// The extra-case table rows, keyed by (K^2, chi) with their (n,m,k)
// witnesses; each revalidates through the construction layer in the tests.
struct ExtraCaseRow {
    HorikawaLine line;
    Family family;
    long k2, chi, n, m, k;
};
const std::vector<ExtraCaseRow>& extra_case_tables();

struct SweepRow {
    Int chi, k2;
    bool admissible = true;
    bool in_region = false;
    std::optional<FamilyParams> params;
    Int h11;  // 0 outside the region
};

// All admissible pairs with chi <= max_chi, region-flagged and solved.
std::vector<SweepRow> sweep(long max_chi, int parallelism = 1);

}  // namespace rhomax
