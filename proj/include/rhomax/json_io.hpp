#pragma once

#include <json.hpp>

#include "rhomax/geography.hpp"

namespace rhomax {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit, as strings otherwise.
Json json_int(const Int& v);

Json to_json(const SurfaceInvariants& inv);
Json to_json(const SingularityCensus& c);
Json to_json(const DivisorClass& d);
Json to_json(const SingularEvent& e);
Json to_json(const BuildingData& bd);
Json to_json(const Certificate& c);
Json to_json(const ConstructionRecord& r);
Json to_json(const DensityWitness& w);
Json to_json(const CoverageVerdict& v);
Json to_json(const GermClass& g);

Json to_json(const Arrangement& a, const BranchAssignment& partition);

struct ArrangementDump {
    Arrangement arrangement;
    BranchAssignment partition;
};
ArrangementDump arrangement_from_json(const Json& j);

Json sweep_to_json(const std::vector<SweepRow>& rows);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace rhomax
