#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uefs/dataset.hpp"
#include "uefs/matrix.hpp"
#include "uefs/rng.hpp"

namespace fixtures {

// Compact dataset builder: kinds holds one 'n' (numerical) or 'c'
// (categorical) per feature, cells are row-major with std::nullopt = missing.
// Categorical columns all carry `categories` labels c0, c1, ...
inline uefs::Dataset table(const std::string& kinds, std::vector<uefs::Cell> cells,
                           const std::vector<int>& outcomes, size_t categories = 3) {
    std::vector<uefs::ColumnInfo> columns;
    std::vector<std::vector<std::string>> categoryLabels;
    for (size_t f = 0; f < kinds.size(); ++f) {
        uefs::ColumnInfo info;
        info.name = "f" + std::to_string(f);
        info.kind = kinds[f] == 'c' ? uefs::ColumnKind::Categorical : uefs::ColumnKind::Numerical;
        columns.push_back(info);
        std::vector<std::string> labels;
        if (kinds[f] == 'c') {
            for (size_t j = 0; j < categories; ++j) labels.push_back("c" + std::to_string(j));
        }
        categoryLabels.push_back(std::move(labels));
    }
    std::vector<std::string> outcomeLabels;
    for (int o : outcomes) outcomeLabels.push_back(o == 1 ? "1" : "0");
    return uefs::Dataset(std::move(columns), std::move(cells), outcomes,
                         std::move(outcomeLabels), std::move(categoryLabels));
}

// Random mixed table with MCAR masking. Every column keeps at least one
// present cell and the outcome vector always carries both classes.
inline uefs::Dataset randomTable(size_t rows, size_t numericalCols, size_t categoricalCols,
                                 double missingRate, uint64_t seed, size_t categories = 3) {
    uefs::Rng rng(seed);
    std::string kinds(numericalCols, 'n');
    kinds.append(categoricalCols, 'c');
    const size_t features = kinds.size();
    std::vector<uefs::Cell> cells(rows * features);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t f = 0; f < features; ++f) {
            cells[r * features + f] = kinds[f] == 'c'
                                          ? static_cast<double>(rng.below(categories))
                                          : rng.normal();
        }
    }
    for (size_t f = 0; f < features; ++f) {
        bool any = false;
        for (size_t r = 0; r < rows; ++r) {
            if (rng.bernoulli(missingRate)) {
                cells[r * features + f] = std::nullopt;
            } else {
                any = true;
            }
        }
        if (!any) cells[f] = kinds[f] == 'c' ? uefs::Cell(0.0) : uefs::Cell(0.5);
    }
    std::vector<int> outcomes(rows, 0);
    for (size_t r = 0; r < rows; ++r) outcomes[r] = static_cast<int>(rng.below(2));
    outcomes[0] = 1;
    if (rows > 1) outcomes[1] = 0;
    return table(kinds, std::move(cells), outcomes, categories);
}

inline uefs::Matrix randomMatrix(size_t rows, size_t cols, uint64_t seed) {
    uefs::Rng rng(seed);
    uefs::Matrix x(rows, cols);
    for (double& v : x.data) v = rng.unit();
    return x;
}

// Binary labels with both classes present whenever rows >= 2.
inline std::vector<int> randomLabels(size_t rows, uint64_t seed) {
    uefs::Rng rng(seed);
    std::vector<int> y(rows);
    for (size_t r = 0; r < rows; ++r) y[r] = static_cast<int>(rng.below(2));
    if (rows >= 2) {
        y[0] = 1;
        y[1] = 0;
    }
    return y;
}

}  // namespace fixtures
