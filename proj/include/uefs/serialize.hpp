#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uefs/aggregation.hpp"
#include "uefs/metrics.hpp"
#include "uefs/synthetic.hpp"

namespace uefs {

// JSON field names below are a stable artifact contract; tooling downstream
// keys on them.

nlohmann::json toJson(const Confusion& c);
nlohmann::json toJson(const FoldMetrics& m);
nlohmann::json toJson(const EvalReport& report);
nlohmann::json toJson(const GroundTruth& truth);

// Ordered selected features with scores and the per-feature preprocessing
// diagnostics behind the variance-weighted aggregations.
nlohmann::json selectionToJson(const AggregateScores& scores,
                               const std::vector<std::string>& featureNames,
                               const std::vector<double>& missingRates,
                               const std::vector<double>& entropyDeltas, double alpha,
                               double beta);

// dump(2) plus a trailing newline; keyed artifacts stay byte-stable for a
// fixed config and seed.
void writeJsonFile(const nlohmann::json& j, const std::string& path);

}  // namespace uefs
