#include "uefs/serialize.hpp"

#include <fstream>

#include "uefs/error.hpp"

namespace uefs {

nlohmann::json toJson(const Confusion& c) {
    return {{"tp", c.tp}, {"fp", c.fp}, {"tn", c.tn}, {"fn", c.fn}};
}

nlohmann::json toJson(const FoldMetrics& m) {
    return {{"accuracy", m.accuracy},
            {"auc_score_based", m.aucScoreBased},
            {"auc_vote_based", m.aucVoteBased},
            {"confusion", toJson(m.confusion)}};
}

nlohmann::json toJson(const EvalReport& report) {
    nlohmann::json perFold = nlohmann::json::array();
    for (const auto& fm : report.perFold) perFold.push_back(toJson(fm));
    return {{"accuracy", report.accuracy},
            {"auc_score_based", report.aucScoreBased},
            {"auc_vote_based", report.aucVoteBased},
            {"confusion", toJson(report.confusion)},
            {"per_fold", perFold},
            {"diagnostics",
             {{"mean_missing_rate_selected", report.meanMissingRateSelected},
              {"mean_entropy_delta_selected", report.meanEntropyDeltaSelected}}}};
}

nlohmann::json toJson(const GroundTruth& truth) {
    return {{"informative_features", truth.informativeFeatures},
            {"true_missing_rates", truth.trueMissingRates}};
}

nlohmann::json selectionToJson(const AggregateScores& scores,
                               const std::vector<std::string>& featureNames,
                               const std::vector<double>& missingRates,
                               const std::vector<double>& entropyDeltas, double alpha,
                               double beta) {
    nlohmann::json selected = nlohmann::json::array();
    for (int f : scores.selected) {
        const auto i = static_cast<size_t>(f);
        nlohmann::json entry;
        entry["feature"] = f;
        entry["name"] = i < featureNames.size() ? featureNames[i] : std::string();
        entry["score"] = scores.perFeatureScore[i];
        entry["missing_rate"] = i < missingRates.size() ? missingRates[i] : 0.0;
        entry["entropy_delta"] = i < entropyDeltas.size() ? entropyDeltas[i] : 0.0;
        selected.push_back(entry);
    }
    nlohmann::json out;
    out["method"] = methodName(scores.method);
    out["direction"] = scores.direction == ScoreDirection::LowerIsBetter ? "lower_is_better"
                                                                         : "higher_is_better";
    out["k"] = scores.selected.size();
    out["alpha"] = alpha;
    out["beta"] = beta;
    out["selected"] = selected;
    return out;
}

void writeJsonFile(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IngestionError("cannot open " + path + " for writing");
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw IngestionError("failed writing " + path);
    }
}

}  // namespace uefs
