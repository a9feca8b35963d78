#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fiedler/admissibility.hpp"
#include "fiedler/enumeration.hpp"
#include "fiedler/game.hpp"
#include "fiedler/hitting.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

using Json = nlohmann::ordered_json;

Json to_json(const EigenPair& pair);
Json to_json(const BoundsReport& report);
Json to_json(const MonotonicityVerdict& verdict);
Json to_json(const ExtremaVerdict& verdict);
Json to_json(const AdmissibilityReport& report);
Json to_json(const PayoffEstimate& estimate);
Json to_json(const HittingProfile& profile);
Json to_json(const SurveyRecord& record);
Json to_json(const SurveyAggregate& aggregate);

/// Serializes with doubles at 17 significant digits; NaN and infinities
/// become null. indent < 0 gives a single line.
std::string dump_json(const Json& value, int indent = 2);

}  // namespace fiedler
