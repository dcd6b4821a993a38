#include "uefs/synthetic.hpp"

#include <string>

#include "uefs/error.hpp"
#include "uefs/rng.hpp"

namespace uefs {

namespace {

void validate(const SyntheticSpec& spec) {
    if (spec.nPos < 1) {
        throw ValidationError("n_pos must be at least 1");
    }
    if (spec.nNeg < spec.nPos) {
        throw ValidationError("n_neg must be at least n_pos (minority class is positive)");
    }
    if (spec.nInformative + spec.nNoiseNumerical + spec.nNoiseCategorical < 1) {
        throw ValidationError("at least one feature is required");
    }
    auto validRate = [](double r) { return r >= 0.0 && r < 1.0; };
    if (!validRate(spec.missing.minRate) || !validRate(spec.missing.maxRate) ||
        spec.missing.minRate > spec.missing.maxRate) {
        throw ValidationError("missing ramp must satisfy 0 <= min <= max < 1");
    }
    if (!(spec.labelNoise >= 0.0 && spec.labelNoise < 1.0)) {
        throw ValidationError("label noise must be in [0,1)");
    }
    if (!(spec.effectSize >= 0.0)) {
        throw ValidationError("effect size must be nonnegative");
    }
}

// Linear position of `i` in [0, n): 0 at the start, 1 at the end; 0 for a
// singleton domain.
double rampPosition(size_t i, size_t n) {
    if (n <= 1) return 0.0;
    return static_cast<double>(i) / static_cast<double>(n - 1);
}

std::vector<double> missingRates(const SyntheticSpec& spec) {
    const size_t f = spec.nInformative + spec.nNoiseNumerical + spec.nNoiseCategorical;
    const double span = spec.missing.maxRate - spec.missing.minRate;
    std::vector<double> rates(f, 0.0);
    for (size_t i = 0; i < f; ++i) {
        double pos;
        if (spec.missingLink == MissingLink::FeatureIndex) {
            pos = rampPosition(i, f);
        } else if (i < spec.nInformative) {
            pos = rampPosition(i, spec.nInformative);
        } else {
            pos = rampPosition(i - spec.nInformative, f - spec.nInformative);
        }
        rates[i] = spec.missing.minRate + span * pos;
    }
    return rates;
}

}  // namespace

std::pair<Dataset, GroundTruth> generateSynthetic(const SyntheticSpec& spec) {
    validate(spec);

    const size_t rows = spec.nPos + spec.nNeg;
    const size_t f = spec.nInformative + spec.nNoiseNumerical + spec.nNoiseCategorical;
    const size_t firstCategorical = spec.nInformative + spec.nNoiseNumerical;

    std::vector<int> labels(rows, 0);
    for (size_t r = 0; r < spec.nPos; ++r) labels[r] = 1;

    std::vector<ColumnInfo> columns(f);
    std::vector<std::vector<std::string>> categoryLabels(f);
    for (size_t i = 0; i < f; ++i) {
        columns[i].name = "f" + std::to_string(i);
        if (i >= firstCategorical) {
            columns[i].kind = ColumnKind::Categorical;
            categoryLabels[i] = {"c0", "c1", "c2"};
        }
    }

    std::vector<Cell> cells(rows * f);
    for (size_t i = 0; i < f; ++i) {
        Rng rng(subSeed(spec.seed, seedtag::kSynthValues, i));
        for (size_t r = 0; r < rows; ++r) {
            double value;
            if (i < spec.nInformative) {
                value = rng.normal() + (labels[r] == 1 ? spec.effectSize : 0.0);
            } else if (i < firstCategorical) {
                value = rng.normal();
            } else {
                value = static_cast<double>(rng.below(3));
            }
            cells[r * f + i] = value;
        }
    }

    if (spec.labelNoise > 0.0) {
        Rng rng(subSeed(spec.seed, seedtag::kSynthLabelNoise, 0));
        for (size_t r = 0; r < rows; ++r) {
            if (rng.bernoulli(spec.labelNoise)) labels[r] = 1 - labels[r];
        }
    }

    const auto rates = missingRates(spec);
    for (size_t i = 0; i < f; ++i) {
        if (rates[i] <= 0.0) continue;
        Rng rng(subSeed(spec.seed, seedtag::kSynthMask, i));
        for (size_t r = 0; r < rows; ++r) {
            if (rng.bernoulli(rates[i])) cells[r * f + i].reset();
        }
    }

    std::vector<std::string> outcomeLabels(rows);
    for (size_t r = 0; r < rows; ++r) outcomeLabels[r] = labels[r] == 1 ? "1" : "0";

    GroundTruth truth;
    for (size_t i = 0; i < spec.nInformative; ++i) truth.informativeFeatures.push_back(static_cast<int>(i));
    truth.trueMissingRates = rates;

    return {Dataset(std::move(columns), std::move(cells), std::move(labels),
                    std::move(outcomeLabels), std::move(categoryLabels)),
            truth};
}

}  // namespace uefs
