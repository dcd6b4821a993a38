#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "uefs/dataset.hpp"

namespace uefs {

// Per-feature missing rate profile: linear from minRate to maxRate across the
// ramp's domain. Equal endpoints give a constant rate.
struct MissingRamp {
    double minRate = 0.0;
    double maxRate = 0.0;
};

// What the ramp runs across: the global feature index, or each of the
// informative and noise blocks separately (so missingness varies among
// equally informative features — the regime that separates the
// variance-weighted aggregations from plain accuracy weighting).
enum class MissingLink { FeatureIndex, Informativeness };

struct SyntheticSpec {
    size_t nPos = 0;
    size_t nNeg = 0;
    size_t nInformative = 0;
    size_t nNoiseNumerical = 0;
    size_t nNoiseCategorical = 0;
    double effectSize = 1.0;  // class-mean separation in noise-SD units
    MissingRamp missing;
    MissingLink missingLink = MissingLink::FeatureIndex;
    double labelNoise = 0.0;
    uint64_t seed = 0;
};

struct GroundTruth {
    std::vector<int> informativeFeatures;  // ascending
    std::vector<double> trueMissingRates;  // per feature, the masking probability
};

// Imbalanced mixed-type dataset with planted signal: informative numericals
// are class-conditional unit-variance Gaussians separated by effectSize,
// noise numericals are N(0,1), noise categoricals uniform over 3 categories.
// Labels flip with probability labelNoise after values are drawn; cells go
// missing independently per feature at its profile rate.
std::pair<Dataset, GroundTruth> generateSynthetic(const SyntheticSpec& spec);

}  // namespace uefs
