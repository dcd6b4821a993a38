#include "uefs/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "uefs/error.hpp"
#include "uefs/serialize.hpp"

namespace uefs {

namespace {

void validateConfig(const PipelineConfig& cfg) {
    if (cfg.ensemble.nWays < 1 || cfg.ensemble.nWays % 2 == 0) {
        throw ValidationError("n_ways must be a positive odd number, got " +
                              std::to_string(cfg.ensemble.nWays));
    }
    if (cfg.ensemble.nFeatures < 1) {
        throw ValidationError("n_features must be at least 1");
    }
    if (cfg.ensemble.cvFolds < 2) {
        throw ValidationError("cv_folds must be at least 2");
    }
    if (!(cfg.completionThreshold >= 0.0 && cfg.completionThreshold <= 1.0)) {
        throw ValidationError("completion threshold must be in [0,1]");
    }
    if (cfg.imputation == ImputationKind::SimilarityBased && cfg.imputeK < 1) {
        throw ValidationError("impute_k must be at least 1");
    }
    if (cfg.entropyBins < 1) {
        throw ValidationError("entropy_bins must be at least 1");
    }
    // Constructing validates alpha/beta.
    VarianceWeightParams(resolveAlpha(cfg.ensemble.aggregation, cfg.alpha), cfg.beta);
}

std::string formatDouble(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

void ensureOutDir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IngestionError("cannot create output directory " + dir + ": " + ec.message());
    }
}

void writeTextFile(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IngestionError("cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw IngestionError("failed writing " + path);
    }
}

struct SelectOutcome {
    PreparedData prep;
    PipelineResult result;
};

SelectOutcome selectStage(const PipelineConfig& cfg) {
    validateConfig(cfg);
    PreparedData prep = prepareData(cfg);

    const auto ways = makeWays(prep.imputed, cfg.ensemble.nWays, cfg.ensemble.seed);
    const auto models = fitWays(prep.imputed, ways, cfg.ensemble);

    const VarianceWeightParams params(resolveAlpha(cfg.ensemble.aggregation, cfg.alpha),
                                      cfg.beta);
    AggregateScores selection =
        aggregate(models, prep.imputed.featureCount(), cfg.ensemble.aggregation,
                  cfg.ensemble.nFeatures, prep.diagnostics.missingRates,
                  prep.diagnostics.entropyDeltas, params);

    PipelineResult result;
    result.rawRows = prep.rawRows;
    result.rawFeatures = prep.rawFeatures;
    result.rows = prep.filtered.rowCount();
    result.features = prep.filtered.featureCount();
    for (int f : selection.selected) {
        result.selectedNames.push_back(prep.filtered.column(static_cast<size_t>(f)).name);
    }
    result.diagnostics = prep.diagnostics;
    result.selection = std::move(selection);
    return {std::move(prep), std::move(result)};
}

void writeSelection(const PipelineConfig& cfg, const PreparedData& prep,
                    const PipelineResult& result) {
    ensureOutDir(cfg.outDir);
    std::vector<std::string> names;
    names.reserve(prep.filtered.featureCount());
    for (const auto& col : prep.filtered.columns()) names.push_back(col.name);
    writeJsonFile(selectionToJson(result.selection, names, prep.diagnostics.missingRates,
                                  prep.diagnostics.entropyDeltas,
                                  resolveAlpha(cfg.ensemble.aggregation, cfg.alpha), cfg.beta),
                  cfg.outDir + "/selected_features.json");
}

std::string summaryText(const PipelineConfig& cfg, const PipelineResult& r) {
    std::string s;
    s += "rows: raw=" + std::to_string(r.rawRows) + " filtered=" + std::to_string(r.rows) + "\n";
    s += "features: raw=" + std::to_string(r.rawFeatures) +
         " filtered=" + std::to_string(r.features) + "\n";
    s += "completion_threshold: " + formatDouble(cfg.completionThreshold) + "\n";
    s += "imputation: " +
         std::string(cfg.imputation == ImputationKind::MeanBased ? "mean" : "similarity");
    if (cfg.imputation == ImputationKind::SimilarityBased) {
        s += " k=" + std::to_string(cfg.imputeK);
    }
    s += "\n";
    s += "method: " + methodName(cfg.ensemble.aggregation) +
         " k=" + std::to_string(cfg.ensemble.nFeatures) +
         " alpha=" + formatDouble(resolveAlpha(cfg.ensemble.aggregation, cfg.alpha)) +
         " beta=" + formatDouble(cfg.beta) + "\n";
    s += "n_ways: " + std::to_string(cfg.ensemble.nWays) +
         " cv_folds: " + std::to_string(cfg.ensemble.cvFolds) +
         " seed: " + std::to_string(cfg.ensemble.seed) + "\n";
    s += "selected:";
    for (const auto& name : r.selectedNames) s += " " + name;
    s += "\n";
    s += "accuracy: " + formatDouble(r.report.accuracy) + "\n";
    s += "auc_score_based: " + formatDouble(r.report.aucScoreBased) + "\n";
    s += "auc_vote_based: " + formatDouble(r.report.aucVoteBased) + "\n";
    s += "confusion: tp=" + std::to_string(r.report.confusion.tp) +
         " fp=" + std::to_string(r.report.confusion.fp) +
         " tn=" + std::to_string(r.report.confusion.tn) +
         " fn=" + std::to_string(r.report.confusion.fn) + "\n";
    s += "mean_missing_rate_selected: " + formatDouble(r.report.meanMissingRateSelected) + "\n";
    s += "mean_entropy_delta_selected: " + formatDouble(r.report.meanEntropyDeltaSelected) + "\n";
    return s;
}

double sampleSd(const std::vector<double>& values, double mean) {
    if (values.size() < 2) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += (v - mean) * (v - mean);
    return std::sqrt(sum / static_cast<double>(values.size() - 1));
}

}  // namespace

double resolveAlpha(AggregationMethod method, const std::optional<double>& alpha) {
    if (alpha) return *alpha;
    return method == AggregationMethod::Eaa ? 0.5 : 1.0;
}

double normalizeCompletion(double value) {
    const double fraction = value > 1.0 ? value / 100.0 : value;
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw ValidationError("completion threshold out of range: " + std::to_string(value));
    }
    return fraction;
}

namespace {

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parseDouble(const std::string& key, const std::string& value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ValidationError("config key '" + key + "': not a number: '" + value + "'");
    }
    return out;
}

long long parseInt(const std::string& key, const std::string& value) {
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ValidationError("config key '" + key + "': not an integer: '" + value + "'");
    }
    return out;
}

void applyConfigEntry(PipelineConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "data") {
        cfg.dataCsv = value;
    } else if (key == "schema") {
        cfg.schemaPath = value;
    } else if (key == "completion") {
        cfg.completionThreshold = normalizeCompletion(parseDouble(key, value));
    } else if (key == "imputation") {
        if (value == "mean") {
            cfg.imputation = ImputationKind::MeanBased;
        } else if (value == "similarity") {
            cfg.imputation = ImputationKind::SimilarityBased;
        } else {
            throw ValidationError("config key 'imputation': expected mean|similarity, got '" +
                                  value + "'");
        }
    } else if (key == "impute_k") {
        cfg.imputeK = static_cast<int>(parseInt(key, value));
    } else if (key == "n_ways") {
        cfg.ensemble.nWays = static_cast<int>(parseInt(key, value));
    } else if (key == "n_features") {
        cfg.ensemble.nFeatures = static_cast<int>(parseInt(key, value));
    } else if (key == "cv_folds") {
        cfg.ensemble.cvFolds = static_cast<int>(parseInt(key, value));
    } else if (key == "seed") {
        cfg.ensemble.seed = static_cast<uint64_t>(parseInt(key, value));
    } else if (key == "method") {
        cfg.ensemble.aggregation = parseMethod(value);
    } else if (key == "alpha") {
        cfg.alpha = parseDouble(key, value);
    } else if (key == "beta") {
        cfg.beta = parseDouble(key, value);
    } else if (key == "entropy_bins") {
        cfg.entropyBins = static_cast<int>(parseInt(key, value));
    } else if (key == "max_depth") {
        const long long depth = parseInt(key, value);
        cfg.ensemble.tree.maxDepth =
            depth > 0 ? std::optional<int>(static_cast<int>(depth)) : std::nullopt;
    } else if (key == "min_samples_split") {
        cfg.ensemble.tree.minSamplesSplit = static_cast<int>(parseInt(key, value));
    } else if (key == "out_dir") {
        cfg.outDir = value;
    } else if (key == "positive_label") {
        cfg.positiveLabel = value;
    } else if (key == "missing_tokens") {
        cfg.missingTokens.clear();
        size_t start = 0;
        while (true) {
            const size_t comma = value.find(',', start);
            cfg.missingTokens.push_back(value.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } else if (key == "n_pos") {
        cfg.synth.nPos = static_cast<size_t>(parseInt(key, value));
    } else if (key == "n_neg") {
        cfg.synth.nNeg = static_cast<size_t>(parseInt(key, value));
    } else if (key == "n_informative") {
        cfg.synth.nInformative = static_cast<size_t>(parseInt(key, value));
    } else if (key == "n_noise_numerical") {
        cfg.synth.nNoiseNumerical = static_cast<size_t>(parseInt(key, value));
    } else if (key == "n_noise_categorical") {
        cfg.synth.nNoiseCategorical = static_cast<size_t>(parseInt(key, value));
    } else if (key == "effect_size") {
        cfg.synth.effectSize = parseDouble(key, value);
    } else if (key == "missing_min") {
        cfg.synth.missing.minRate = parseDouble(key, value);
    } else if (key == "missing_max") {
        cfg.synth.missing.maxRate = parseDouble(key, value);
    } else if (key == "missing_link") {
        if (value == "index") {
            cfg.synth.missingLink = MissingLink::FeatureIndex;
        } else if (value == "informativeness") {
            cfg.synth.missingLink = MissingLink::Informativeness;
        } else {
            throw ValidationError(
                "config key 'missing_link': expected index|informativeness, got '" + value +
                "'");
        }
    } else if (key == "label_noise") {
        cfg.synth.labelNoise = parseDouble(key, value);
    } else {
        throw ValidationError("unknown config key '" + key + "'");
    }
}

}  // namespace

PipelineConfig loadConfigFile(const std::string& path, PipelineConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IngestionError("cannot open config file " + path);
    }
    std::string line;
    size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("config line " + std::to_string(lineNo) +
                                  ": expected key=value, got '" + stripped + "'");
        }
        applyConfigEntry(base, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return base;
}

PreparedData prepareData(const PipelineConfig& cfg) {
    std::optional<Dataset> raw;
    if (cfg.dataCsv.empty()) {
        SyntheticSpec spec = cfg.synth;
        spec.seed = cfg.ensemble.seed;  // one master seed fans out everywhere
        raw = generateSynthetic(spec).first;
    } else {
        CsvSchema schema = CsvSchema::load(cfg.schemaPath);
        schema.positiveLabel = cfg.positiveLabel;
        schema.missingTokens = cfg.missingTokens;
        raw = ingestCsv(cfg.dataCsv, schema);
    }

    Dataset filtered = filterByCompletion(*raw, cfg.completionThreshold);
    FeatureDiagnostics diagnostics;
    diagnostics.missingRates = completionStats(filtered).perFeatureMissingRate;

    Dataset imputed = cfg.imputation == ImputationKind::MeanBased
                          ? imputeMean(filtered)
                          : imputeSimilarity(filtered, cfg.imputeK);
    diagnostics.entropyDeltas = entropyDelta(filtered, imputed, cfg.entropyBins);

    return {raw->rowCount(), raw->featureCount(), std::move(filtered), std::move(imputed),
            std::move(diagnostics)};
}

AggregateScores aggregate(const std::vector<WayModel>& models, size_t featureCount,
                          AggregationMethod method, int k,
                          const std::vector<double>& missingRates,
                          const std::vector<double>& entropyDeltas,
                          const VarianceWeightParams& params) {
    if (models.empty()) {
        throw ValidationError("no fitted ways to aggregate");
    }
    if (usesRankLists(method)) {
        std::vector<std::vector<int>> rankLists;
        std::vector<double> cvAucs;
        for (const auto& m : models) {
            if (m.rankList.empty()) {
                throw ValidationError(methodName(method) +
                                      " needs rank lists; fit ways with rank lists enabled");
            }
            rankLists.push_back(m.rankList);
            cvAucs.push_back(m.cvAuc);
        }
        return method == AggregationMethod::Cla ? cla(rankLists, k) : wma(rankLists, cvAucs, k);
    }

    std::vector<std::vector<int>> sets;
    std::vector<double> cvAccuracies;
    for (const auto& m : models) {
        sets.push_back(m.positiveSet);
        cvAccuracies.push_back(m.cvAccuracy);
    }
    switch (method) {
        case AggregationMethod::Ofa:
            return ofa(sets, featureCount, k);
        case AggregationMethod::Caa:
            return caa(sets, cvAccuracies, featureCount, k);
        case AggregationMethod::Maa:
            return maa(sets, cvAccuracies, missingRates, params, k);
        case AggregationMethod::Eaa:
            return eaa(sets, cvAccuracies, entropyDeltas, params, k);
        default:
            throw ValidationError("unreachable aggregation dispatch");
    }
}

PipelineResult runSelect(const PipelineConfig& cfg, bool writeArtifacts) {
    SelectOutcome outcome = selectStage(cfg);
    if (writeArtifacts) {
        writeSelection(cfg, outcome.prep, outcome.result);
    }
    return std::move(outcome.result);
}

PipelineResult runPipeline(const PipelineConfig& cfg, bool writeArtifacts) {
    SelectOutcome outcome = selectStage(cfg);
    outcome.result.report = evaluate(outcome.prep.imputed, outcome.result.selection.selected,
                                     cfg.ensemble, &outcome.result.diagnostics);
    if (writeArtifacts) {
        writeSelection(cfg, outcome.prep, outcome.result);
        writeJsonFile(toJson(outcome.result.report), cfg.outDir + "/eval_report.json");
        writeTextFile(summaryText(cfg, outcome.result), cfg.outDir + "/summary.txt");
    }
    return std::move(outcome.result);
}

std::vector<BenchCell> runBench(const PipelineConfig& base, const BenchSweep& sweep,
                                bool writeArtifacts) {
    if (sweep.thresholds.empty() || sweep.methods.empty() || sweep.seeds.empty()) {
        throw ValidationError("bench sweep needs at least one threshold, method, and seed");
    }
    auto thresholds = sweep.thresholds;
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    auto methods = sweep.methods;
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
    auto seeds = sweep.seeds;
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    const bool needRanks = std::any_of(methods.begin(), methods.end(), usesRankLists);

    std::vector<BenchCell> cells;
    for (double p : thresholds) {
        for (uint64_t seed : seeds) {
            PipelineConfig cfg = base;
            cfg.completionThreshold = p;
            cfg.ensemble.seed = seed;
            validateConfig(cfg);

            const PreparedData prep = prepareData(cfg);
            const auto ways = makeWays(prep.imputed, cfg.ensemble.nWays, seed);
            const auto models = fitWays(prep.imputed, ways, cfg.ensemble, needRanks);

            for (AggregationMethod method : methods) {
                const VarianceWeightParams params(resolveAlpha(method, base.alpha), base.beta);
                const AggregateScores selection =
                    aggregate(models, prep.imputed.featureCount(), method,
                              cfg.ensemble.nFeatures, prep.diagnostics.missingRates,
                              prep.diagnostics.entropyDeltas, params);
                const EvalReport report = evaluate(prep.imputed, selection.selected,
                                                   cfg.ensemble, &prep.diagnostics);
                BenchCell cell;
                cell.completion = p;
                cell.method = method;
                cell.seed = seed;
                cell.accuracy = report.accuracy;
                cell.aucScoreBased = report.aucScoreBased;
                cell.aucVoteBased = report.aucVoteBased;
                cell.meanMissingRateSelected = report.meanMissingRateSelected;
                cell.meanEntropyDeltaSelected = report.meanEntropyDeltaSelected;
                cells.push_back(cell);
            }
        }
    }

    std::sort(cells.begin(), cells.end(), [](const BenchCell& a, const BenchCell& b) {
        if (a.completion != b.completion) return a.completion < b.completion;
        if (a.method != b.method) return a.method < b.method;
        return a.seed < b.seed;
    });

    if (writeArtifacts) {
        ensureOutDir(base.outDir);
        std::string csv =
            "completion,method,seed,accuracy,auc_score_based,auc_vote_based,"
            "mean_missing_rate_selected,mean_entropy_delta_selected\n";
        for (const auto& c : cells) {
            csv += formatDouble(c.completion) + "," + methodName(c.method) + "," +
                   std::to_string(c.seed) + "," + formatDouble(c.accuracy) + "," +
                   formatDouble(c.aucScoreBased) + "," + formatDouble(c.aucVoteBased) + "," +
                   formatDouble(c.meanMissingRateSelected) + "," +
                   formatDouble(c.meanEntropyDeltaSelected) + "\n";
        }
        writeTextFile(csv, base.outDir + "/bench.csv");

        std::string summary =
            "completion,method,cells,accuracy_mean,accuracy_sd,auc_score_based_mean,"
            "auc_score_based_sd,mean_missing_rate_selected_mean,mean_missing_rate_selected_sd,"
            "mean_entropy_delta_selected_mean,mean_entropy_delta_selected_sd\n";
        for (double p : thresholds) {
            for (AggregationMethod method : methods) {
                std::vector<double> acc, aucScore, miss, delta;
                for (const auto& c : cells) {
                    if (c.completion == p && c.method == method) {
                        acc.push_back(c.accuracy);
                        aucScore.push_back(c.aucScoreBased);
                        miss.push_back(c.meanMissingRateSelected);
                        delta.push_back(c.meanEntropyDeltaSelected);
                    }
                }
                auto meanOf = [](const std::vector<double>& v) {
                    double s = 0.0;
                    for (double x : v) s += x;
                    return s / static_cast<double>(v.size());
                };
                const double accMean = meanOf(acc);
                const double aucMean = meanOf(aucScore);
                const double missMean = meanOf(miss);
                const double deltaMean = meanOf(delta);
                summary += formatDouble(p) + "," + methodName(method) + "," +
                           std::to_string(acc.size()) + "," + formatDouble(accMean) + "," +
                           formatDouble(sampleSd(acc, accMean)) + "," + formatDouble(aucMean) +
                           "," + formatDouble(sampleSd(aucScore, aucMean)) + "," +
                           formatDouble(missMean) + "," + formatDouble(sampleSd(miss, missMean)) +
                           "," + formatDouble(deltaMean) + "," +
                           formatDouble(sampleSd(delta, deltaMean)) + "\n";
            }
        }
        writeTextFile(summary, base.outDir + "/bench_summary.csv");
    }
    return cells;
}

}  // namespace uefs
