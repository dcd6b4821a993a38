#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uefs/error.hpp"
#include "uefs/pipeline.hpp"
#include "uefs/serialize.hpp"

namespace {

using namespace uefs;

std::string describeConfig(const PipelineConfig& cfg) {
    std::string s;
    s += "data = " + cfg.dataCsv + "\n";
    s += "schema = " + cfg.schemaPath + "\n";
    s += "completion = " + std::to_string(cfg.completionThreshold) + "\n";
    s += "imputation = " +
         std::string(cfg.imputation == ImputationKind::MeanBased ? "mean" : "similarity") + "\n";
    s += "impute_k = " + std::to_string(cfg.imputeK) + "\n";
    s += "n_ways = " + std::to_string(cfg.ensemble.nWays) + "\n";
    s += "n_features = " + std::to_string(cfg.ensemble.nFeatures) + "\n";
    s += "cv_folds = " + std::to_string(cfg.ensemble.cvFolds) + "\n";
    s += "seed = " + std::to_string(cfg.ensemble.seed) + "\n";
    s += "method = " + methodName(cfg.ensemble.aggregation) + "\n";
    s += "alpha = " + std::to_string(resolveAlpha(cfg.ensemble.aggregation, cfg.alpha)) + "\n";
    s += "beta = " + std::to_string(cfg.beta) + "\n";
    s += "entropy_bins = " + std::to_string(cfg.entropyBins) + "\n";
    s += "max_depth = " + std::to_string(cfg.ensemble.tree.maxDepth.value_or(0)) + "\n";
    s += "min_samples_split = " + std::to_string(cfg.ensemble.tree.minSamplesSplit) + "\n";
    s += "out_dir = " + cfg.outDir + "\n";
    s += "positive_label = " + cfg.positiveLabel + "\n";
    s += "missing_tokens =";
    for (const auto& t : cfg.missingTokens) s += " '" + t + "'";
    s += "\n";
    s += "n_pos = " + std::to_string(cfg.synth.nPos) + "\n";
    s += "n_neg = " + std::to_string(cfg.synth.nNeg) + "\n";
    s += "n_informative = " + std::to_string(cfg.synth.nInformative) + "\n";
    s += "n_noise_numerical = " + std::to_string(cfg.synth.nNoiseNumerical) + "\n";
    s += "n_noise_categorical = " + std::to_string(cfg.synth.nNoiseCategorical) + "\n";
    s += "effect_size = " + std::to_string(cfg.synth.effectSize) + "\n";
    s += "missing_min = " + std::to_string(cfg.synth.missing.minRate) + "\n";
    s += "missing_max = " + std::to_string(cfg.synth.missing.maxRate) + "\n";
    s += "missing_link = " +
         std::string(cfg.synth.missingLink == MissingLink::FeatureIndex ? "index"
                                                                        : "informativeness") +
         "\n";
    s += "label_noise = " + std::to_string(cfg.synth.labelNoise) + "\n";
    return s;
}

Dataset loadCsv(const PipelineConfig& cfg) {
    if (cfg.dataCsv.empty() || cfg.schemaPath.empty()) {
        throw ValidationError("this command needs --data and --schema (or config keys)");
    }
    CsvSchema schema = CsvSchema::load(cfg.schemaPath);
    schema.positiveLabel = cfg.positiveLabel;
    schema.missingTokens = cfg.missingTokens;
    return ingestCsv(cfg.dataCsv, schema);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Undersampling-ensemble feature selection and evaluation for imbalanced "
                 "tabular data with missing values"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    std::string configPath;
    uint64_t seed = 0;
    std::string outDir;
    bool dryRun = false;
    auto* configOpt = app.add_option("--config", configPath, "key=value config file");
    auto* seedOpt = app.add_option("--seed", seed, "master seed for every stochastic stage");
    auto* outDirOpt = app.add_option("--out-dir", outDir, "directory for artifacts");
    app.add_flag("--dry-run", dryRun, "print the resolved config and touch no files");

    std::string dataCsv;
    std::string schemaPath;
    double completion = -1.0;
    std::string imputationName;
    int imputeK = 0;
    std::string methodName_;
    int nFeatures = 0;
    int nWays = 0;
    int cvFolds = 0;
    double alpha = 0.0;
    double beta = 0.0;
    // The same flag is registered on several subcommands (all bound to one
    // variable); at most one subcommand parses per invocation, so "was it
    // given" is the count summed over every registration.
    std::vector<CLI::Option*> dataOpts, schemaOpts, completionOpts, imputationOpts, imputeKOpts,
        methodOpts, nFeaturesOpts, nWaysOpts, cvFoldsOpts, alphaOpts, betaOpts;
    auto given = [](const std::vector<CLI::Option*>& opts) {
        for (const auto* o : opts) {
            if (o->count() > 0) return true;
        }
        return false;
    };

    auto addDataOptions = [&](CLI::App* sub) {
        dataOpts.push_back(sub->add_option("--data", dataCsv, "input CSV"));
        schemaOpts.push_back(
            sub->add_option("--schema", schemaPath, "schema file (name,kind lines)"));
    };
    auto addCompletionOption = [&](CLI::App* sub) {
        completionOpts.push_back(sub->add_option(
            "--completion", completion, "completion threshold, fraction or percent"));
    };
    auto addModelOptions = [&](CLI::App* sub) {
        imputationOpts.push_back(
            sub->add_option("--imputation", imputationName, "mean|similarity"));
        imputeKOpts.push_back(
            sub->add_option("--impute-k", imputeK, "similarity imputation neighbors"));
        methodOpts.push_back(sub->add_option("--method", methodName_, "cla|wma|ofa|caa|maa|eaa"));
        nFeaturesOpts.push_back(
            sub->add_option("--k,--n-features", nFeatures, "features to select"));
        nWaysOpts.push_back(sub->add_option("--n-ways", nWays, "ensemble ways (odd)"));
        cvFoldsOpts.push_back(sub->add_option("--cv-folds", cvFolds, "cross-validation folds"));
        alphaOpts.push_back(sub->add_option("--alpha", alpha, "variance-weight alpha"));
        betaOpts.push_back(sub->add_option("--beta", beta, "variance-weight beta"));
    };

    // Resolves defaults <- config file <- command-line flags, in that order.
    auto buildConfig = [&]() {
        PipelineConfig cfg;
        if (configOpt->count()) cfg = loadConfigFile(configPath, cfg);
        if (seedOpt->count()) cfg.ensemble.seed = seed;
        if (outDirOpt->count()) cfg.outDir = outDir;
        if (given(dataOpts)) cfg.dataCsv = dataCsv;
        if (given(schemaOpts)) cfg.schemaPath = schemaPath;
        if (given(completionOpts)) cfg.completionThreshold = normalizeCompletion(completion);
        if (given(imputationOpts)) {
            if (imputationName == "mean") {
                cfg.imputation = ImputationKind::MeanBased;
            } else if (imputationName == "similarity") {
                cfg.imputation = ImputationKind::SimilarityBased;
            } else {
                throw ValidationError("--imputation expects mean|similarity, got '" +
                                      imputationName + "'");
            }
        }
        if (given(imputeKOpts)) cfg.imputeK = imputeK;
        if (given(methodOpts)) cfg.ensemble.aggregation = parseMethod(methodName_);
        if (given(nFeaturesOpts)) cfg.ensemble.nFeatures = nFeatures;
        if (given(nWaysOpts)) cfg.ensemble.nWays = nWays;
        if (given(cvFoldsOpts)) cfg.ensemble.cvFolds = cvFolds;
        if (given(alphaOpts)) cfg.alpha = alpha;
        if (given(betaOpts)) cfg.beta = beta;
        return cfg;
    };

    int exitCode = 0;
    auto guarded = [&](auto&& body) {
        try {
            body();
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            exitCode = 1;
        }
    };

    auto* ingestCmd = app.add_subcommand("ingest", "validate a CSV against its schema");
    addDataOptions(ingestCmd);
    ingestCmd->callback([&] {
        guarded([&] {
            const PipelineConfig cfg = buildConfig();
            if (dryRun) {
                std::cout << describeConfig(cfg);
                return;
            }
            const Dataset d = loadCsv(cfg);
            const CompletionStats stats = completionStats(d);
            double minCompletion = 1.0;
            for (double r : stats.perFeatureMissingRate) {
                minCompletion = std::min(minCompletion, 1.0 - r);
            }
            std::cout << "rows: " << d.rowCount() << "\n"
                      << "features: " << d.featureCount() << "\n"
                      << "positives: " << d.positiveCount() << "\n"
                      << "missing_cells: " << d.missingCellCount() << "\n"
                      << "min_feature_completion: " << minCompletion << "\n";
        });
    });

    auto* filterCmd = app.add_subcommand("filter", "drop features and rows below a completion threshold");
    addDataOptions(filterCmd);
    addCompletionOption(filterCmd);
    filterCmd->callback([&] {
        guarded([&] {
            const PipelineConfig cfg = buildConfig();
            if (dryRun) {
                std::cout << describeConfig(cfg);
                return;
            }
            const Dataset d = loadCsv(cfg);
            const Dataset filtered = filterByCompletion(d, cfg.completionThreshold);
            writeCsv(filtered, cfg.outDir + "/filtered.csv");
            writeSchema(filtered, cfg.outDir + "/filtered.schema");
            std::cout << "rows: " << d.rowCount() << " -> " << filtered.rowCount() << "\n"
                      << "features: " << d.featureCount() << " -> " << filtered.featureCount()
                      << "\n"
                      << "wrote: " << cfg.outDir << "/filtered.csv, " << cfg.outDir
                      << "/filtered.schema\n";
        });
    });

    auto* imputeCmd = app.add_subcommand("impute", "fill missing cells (mean or similarity kNN)");
    addDataOptions(imputeCmd);
    std::string imputeMethod;
    int imputeNeighbors = 0;
    auto* imputeMethodOpt = imputeCmd->add_option("--method", imputeMethod, "mean|knn");
    auto* imputeNeighborsOpt = imputeCmd->add_option("--k", imputeNeighbors, "donor neighbors");
    imputeCmd->callback([&] {
        guarded([&] {
            PipelineConfig cfg = buildConfig();
            if (imputeMethodOpt->count()) {
                if (imputeMethod == "mean") {
                    cfg.imputation = ImputationKind::MeanBased;
                } else if (imputeMethod == "knn" || imputeMethod == "similarity") {
                    cfg.imputation = ImputationKind::SimilarityBased;
                } else {
                    throw ValidationError("--method expects mean|knn, got '" + imputeMethod +
                                          "'");
                }
            }
            if (imputeNeighborsOpt->count()) cfg.imputeK = imputeNeighbors;
            if (dryRun) {
                std::cout << describeConfig(cfg);
                return;
            }
            const Dataset d = loadCsv(cfg);
            const Dataset imputed = cfg.imputation == ImputationKind::MeanBased
                                        ? imputeMean(d)
                                        : imputeSimilarity(d, cfg.imputeK);
            nlohmann::json fills = nlohmann::json::array();
            for (size_t f = 0; f < d.featureCount(); ++f) {
                size_t filled = 0;
                for (size_t r = 0; r < d.rowCount(); ++r) {
                    if (!d.cell(r, f)) ++filled;
                }
                nlohmann::json entry;
                entry["name"] = d.column(f).name;
                entry["filled"] = filled;
                fills.push_back(entry);
            }
            writeCsv(imputed, cfg.outDir + "/imputed.csv");
            writeSchema(imputed, cfg.outDir + "/imputed.schema");
            nlohmann::json sidecar;
            sidecar["per_feature_fill_counts"] = fills;
            writeJsonFile(sidecar, cfg.outDir + "/imputed_fill_counts.json");
            std::cout << "filled_cells: " << d.missingCellCount() << "\n"
                      << "wrote: " << cfg.outDir << "/imputed.csv, " << cfg.outDir
                      << "/imputed.schema, " << cfg.outDir << "/imputed_fill_counts.json\n";
        });
    });

    auto* synthCmd = app.add_subcommand("synth", "generate a synthetic dataset with planted signal");
    size_t nPos = 0, nNeg = 0, nInformative = 0, nNoiseNum = 0, nNoiseCat = 0;
    double effectSize = 0.0, missingMin = 0.0, missingMax = 0.0, labelNoise = 0.0;
    std::string missingLink;
    auto* nPosOpt = synthCmd->add_option("--n-pos", nPos, "positive rows");
    auto* nNegOpt = synthCmd->add_option("--n-neg", nNeg, "negative rows");
    auto* nInfOpt = synthCmd->add_option("--n-informative", nInformative, "informative features");
    auto* nNoiseNumOpt =
        synthCmd->add_option("--n-noise-numerical", nNoiseNum, "noise numerical features");
    auto* nNoiseCatOpt =
        synthCmd->add_option("--n-noise-categorical", nNoiseCat, "noise categorical features");
    auto* effectOpt = synthCmd->add_option("--effect-size", effectSize, "class-mean separation");
    auto* missingMinOpt = synthCmd->add_option("--missing-min", missingMin, "ramp minimum rate");
    auto* missingMaxOpt = synthCmd->add_option("--missing-max", missingMax, "ramp maximum rate");
    auto* missingLinkOpt =
        synthCmd->add_option("--missing-link", missingLink, "index|informativeness");
    auto* labelNoiseOpt = synthCmd->add_option("--label-noise", labelNoise, "flip probability");
    synthCmd->callback([&] {
        guarded([&] {
            PipelineConfig cfg = buildConfig();
            if (nPosOpt->count()) cfg.synth.nPos = nPos;
            if (nNegOpt->count()) cfg.synth.nNeg = nNeg;
            if (nInfOpt->count()) cfg.synth.nInformative = nInformative;
            if (nNoiseNumOpt->count()) cfg.synth.nNoiseNumerical = nNoiseNum;
            if (nNoiseCatOpt->count()) cfg.synth.nNoiseCategorical = nNoiseCat;
            if (effectOpt->count()) cfg.synth.effectSize = effectSize;
            if (missingMinOpt->count()) cfg.synth.missing.minRate = missingMin;
            if (missingMaxOpt->count()) cfg.synth.missing.maxRate = missingMax;
            if (missingLinkOpt->count()) {
                if (missingLink == "index") {
                    cfg.synth.missingLink = MissingLink::FeatureIndex;
                } else if (missingLink == "informativeness") {
                    cfg.synth.missingLink = MissingLink::Informativeness;
                } else {
                    throw ValidationError("--missing-link expects index|informativeness");
                }
            }
            if (labelNoiseOpt->count()) cfg.synth.labelNoise = labelNoise;
            if (dryRun) {
                std::cout << describeConfig(cfg);
                return;
            }
            SyntheticSpec spec = cfg.synth;
            spec.seed = cfg.ensemble.seed;
            const auto [d, truth] = generateSynthetic(spec);
            writeCsv(d, cfg.outDir + "/synth.csv");
            writeSchema(d, cfg.outDir + "/synth.schema");
            writeJsonFile(toJson(truth), cfg.outDir + "/ground_truth.json");
            std::cout << "rows: " << d.rowCount() << " (" << d.positiveCount() << " positive)\n"
                      << "features: " << d.featureCount() << "\n"
                      << "missing_cells: " << d.missingCellCount() << "\n"
                      << "wrote: " << cfg.outDir << "/synth.csv, " << cfg.outDir
                      << "/synth.schema, " << cfg.outDir << "/ground_truth.json\n";
        });
    });

    auto* selectCmd =
        app.add_subcommand("select", "rank and select features with an aggregation method");
    addDataOptions(selectCmd);
    addCompletionOption(selectCmd);
    addModelOptions(selectCmd);
    selectCmd->callback([&] {
        guarded([&] {
            const PipelineConfig cfg = buildConfig();
            if (dryRun) {
                std::cout << describeConfig(cfg);
                return;
            }
            const PipelineResult result = runSelect(cfg);
            std::cout << "method: " << methodName(result.selection.method) << "\n"
                      << "selected:";
            for (const auto& name : result.selectedNames) std::cout << " " << name;
            std::cout << "\nwrote: " << cfg.outDir << "/selected_features.json\n";
        });
    });

    auto* evaluateCmd = app.add_subcommand(
        "evaluate", "run the full pipeline and score the selected features held-out");
    addDataOptions(evaluateCmd);
    addCompletionOption(evaluateCmd);
    addModelOptions(evaluateCmd);
    evaluateCmd->callback([&] {
        guarded([&] {
            const PipelineConfig cfg = buildConfig();
            if (dryRun) {
                std::cout << describeConfig(cfg);
                return;
            }
            const PipelineResult result = runPipeline(cfg);
            std::cout << "accuracy: " << result.report.accuracy << "\n"
                      << "auc_score_based: " << result.report.aucScoreBased << "\n"
                      << "auc_vote_based: " << result.report.aucVoteBased << "\n"
                      << "wrote: " << cfg.outDir << "/selected_features.json, " << cfg.outDir
                      << "/eval_report.json, " << cfg.outDir << "/summary.txt\n";
        });
    });

    auto* benchCmd = app.add_subcommand(
        "bench", "sweep completion thresholds x methods x seeds into a comparison CSV");
    addDataOptions(benchCmd);
    addModelOptions(benchCmd);
    std::vector<double> thresholds;
    std::vector<std::string> methods;
    std::vector<uint64_t> seeds;
    benchCmd->add_option("--thresholds", thresholds, "completion thresholds, comma separated")
        ->delimiter(',')
        ->required();
    benchCmd->add_option("--methods", methods, "aggregation methods, comma separated")
        ->delimiter(',')
        ->required();
    benchCmd->add_option("--seeds", seeds, "seeds, comma separated")->delimiter(',')->required();
    benchCmd->callback([&] {
        guarded([&] {
            const PipelineConfig cfg = buildConfig();
            BenchSweep sweep;
            for (double t : thresholds) sweep.thresholds.push_back(normalizeCompletion(t));
            for (const auto& m : methods) sweep.methods.push_back(parseMethod(m));
            sweep.seeds = seeds;
            if (dryRun) {
                std::cout << describeConfig(cfg);
                std::cout << "thresholds =";
                for (double t : sweep.thresholds) std::cout << " " << t;
                std::cout << "\nmethods =";
                for (auto m : sweep.methods) std::cout << " " << methodName(m);
                std::cout << "\nseeds =";
                for (auto s : sweep.seeds) std::cout << " " << s;
                std::cout << "\n";
                return;
            }
            const auto cells = runBench(cfg, sweep);
            std::cout << "cells: " << cells.size() << "\n"
                      << "wrote: " << cfg.outDir << "/bench.csv, " << cfg.outDir
                      << "/bench_summary.csv\n";
        });
    });

    CLI11_PARSE(app, argc, argv);
    return exitCode;
}
