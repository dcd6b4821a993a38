#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uefs/aggregation.hpp"
#include "uefs/dataset.hpp"
#include "uefs/ensemble.hpp"
#include "uefs/imputation.hpp"
#include "uefs/synthetic.hpp"

namespace uefs {

// ensemble.seed is the one master seed: every stochastic stage, the synthetic
// generator included, derives its stream from it (synth.seed is overridden).
struct PipelineConfig {
    // Data source: a CSV + schema pair, or the synthetic generator when
    // dataCsv is empty.
    std::string dataCsv;
    std::string schemaPath;
    SyntheticSpec synth;

    std::string positiveLabel = "1";
    std::vector<std::string> missingTokens = {"", "NA"};

    double completionThreshold = 0.5;
    ImputationKind imputation = ImputationKind::MeanBased;
    int imputeK = 5;
    EnsembleConfig ensemble;
    std::optional<double> alpha;  // unset -> per-method default
    double beta = 2.0;
    int entropyBins = 10;
    std::string outDir = ".";
};

// A completion threshold given as a percentage (value > 1) normalizes to a
// fraction; fractions pass through.
double normalizeCompletion(double value);

// key=value lines with '#' comments, applied over `base`; unknown keys are
// rejected. Keys mirror PipelineConfig (data, schema, completion, imputation,
// impute_k, n_ways, n_features, cv_folds, seed, method, alpha, beta,
// entropy_bins, max_depth, min_samples_split, out_dir, positive_label,
// missing_tokens, and the synthetic generator's n_pos, n_neg, n_informative,
// n_noise_numerical, n_noise_categorical, effect_size, missing_min,
// missing_max, missing_link, label_noise).
PipelineConfig loadConfigFile(const std::string& path, PipelineConfig base = {});

// MAA discounts by missing rate on a [0,1] scale (alpha 1); EAA discounts by
// entropy change in bits, which runs larger (alpha 0.5).
double resolveAlpha(AggregationMethod method, const std::optional<double>& alpha);

// Everything the selection and evaluation stages consume: the filtered
// dataset, its imputed completion, and the per-feature diagnostics bridging
// them.
struct PreparedData {
    size_t rawRows = 0;
    size_t rawFeatures = 0;
    Dataset filtered;
    Dataset imputed;
    FeatureDiagnostics diagnostics;  // pre-imputation missing rates, entropy deltas
};

// load (or generate) -> completion-filter -> impute.
PreparedData prepareData(const PipelineConfig& cfg);

// Dispatch one aggregation method over fitted ways. CLA/WMA require models
// fitted with rank lists.
AggregateScores aggregate(const std::vector<WayModel>& models, size_t featureCount,
                          AggregationMethod method, int k,
                          const std::vector<double>& missingRates,
                          const std::vector<double>& entropyDeltas,
                          const VarianceWeightParams& params);

struct PipelineResult {
    size_t rawRows = 0;
    size_t rawFeatures = 0;
    size_t rows = 0;      // after filtering
    size_t features = 0;  // after filtering
    AggregateScores selection;
    std::vector<std::string> selectedNames;
    FeatureDiagnostics diagnostics;
    EvalReport report;  // empty when evaluation was skipped
};

// Feature-selection stages only: prepare -> undersample -> fit ways ->
// aggregate. Writes selected_features.json when asked to.
PipelineResult runSelect(const PipelineConfig& cfg, bool writeArtifacts = true);

// Full chain: runSelect plus held-out evaluation of the selected features.
// Writes selected_features.json, eval_report.json, and summary.txt.
PipelineResult runPipeline(const PipelineConfig& cfg, bool writeArtifacts = true);

struct BenchSweep {
    std::vector<double> thresholds;
    std::vector<AggregationMethod> methods;
    std::vector<uint64_t> seeds;
};

struct BenchCell {
    double completion = 0.0;
    AggregationMethod method = AggregationMethod::Caa;
    uint64_t seed = 0;
    double accuracy = 0.0;
    double aucScoreBased = 0.0;
    double aucVoteBased = 0.0;
    double meanMissingRateSelected = 0.0;
    double meanEntropyDeltaSelected = 0.0;
};

// One pipeline run per (threshold, method, seed) cell, sharing the fitted
// ways across methods within a (threshold, seed) pair; rows come back sorted
// by (threshold, method, seed). Writes bench.csv plus bench_summary.csv
// (per-cell rows; mean/SD per (threshold, method)) when asked to.
std::vector<BenchCell> runBench(const PipelineConfig& base, const BenchSweep& sweep,
                                bool writeArtifacts = true);

}  // namespace uefs
