#pragma once

#include <string>

#include <json.hpp>

#include "graphfactor/critical.hpp"
#include "graphfactor/factor.hpp"
#include "graphfactor/theorems.hpp"
#include "graphfactor/tutte.hpp"

namespace graphfactor {

using Json = nlohmann::ordered_json;

Json matching_json(const Matching& m);
Json certificate_json(const FactorCertificate& cert, const HAssignment& h);
Json tutte_verdict_json(const TutteVerdict& v);
Json criticality_json(const CriticalityReport& r, const Multigraph& g, const HAssignment& h);
Json theorem_verdict_json(const TheoremVerdict& v);
Json sweep_report_json(const SweepReport& r, bool with_timing = false);

/// Canonical serialization: two-space indent, trailing newline. Reports with
/// the same seed must be byte-identical, so volatile fields stay out unless
/// explicitly requested.
std::string dump(const Json& j);

} // namespace graphfactor
