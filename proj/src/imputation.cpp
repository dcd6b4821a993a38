#include "uefs/imputation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "uefs/error.hpp"

namespace uefs {
namespace {

double nearestCategoryId(double mean, size_t categoryCount) {
    double lo = std::floor(mean);
    double hi = lo + 1.0;
    double id;
    if (mean - lo <= hi - mean) {
        id = lo;
    } else {
        id = hi;
    }
    id = std::max(0.0, std::min(id, static_cast<double>(categoryCount) - 1.0));
    return id;
}

double majorityCategoryId(const std::vector<double>& donorIds, size_t categoryCount) {
    std::vector<size_t> counts(categoryCount, 0);
    for (double id : donorIds) counts[static_cast<size_t>(id)] += 1;
    size_t best = 0;
    for (size_t id = 1; id < counts.size(); ++id) {
        if (counts[id] > counts[best]) best = id;
    }
    return static_cast<double>(best);
}

}  // namespace

Dataset imputeMean(const Dataset& d) {
    const size_t rows = d.rowCount();
    const size_t features = d.featureCount();

    std::vector<Cell> cells;
    cells.reserve(rows * features);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t f = 0; f < features; ++f) cells.push_back(d.cell(r, f));
    }

    for (size_t f = 0; f < features; ++f) {
        double sum = 0.0;
        size_t present = 0;
        for (size_t r = 0; r < rows; ++r) {
            const Cell& c = d.cell(r, f);
            if (!c) continue;
            sum += *c;
            ++present;
        }
        if (present == rows) continue;
        if (present == 0) {
            throw DegenerateDataError("column " + d.column(f).name +
                                      " has no present cells; apply a completion filter first");
        }
        const double mean = sum / static_cast<double>(present);
        const double fill = d.column(f).kind == ColumnKind::Numerical
                                ? mean
                                : nearestCategoryId(mean, d.categoryCount(f));
        for (size_t r = 0; r < rows; ++r) {
            Cell& c = cells[r * features + f];
            if (!c) c = fill;
        }
    }
    return d.withCells(std::move(cells));
}

double similarity(const EncodedMatrix& enc, size_t rowI, size_t rowJ) {
    double dot = 0.0;
    size_t shared = 0;
    const Cell* a = &enc.cells[rowI * enc.cols];
    const Cell* b = &enc.cells[rowJ * enc.cols];
    for (size_t c = 0; c < enc.cols; ++c) {
        if (a[c] && b[c]) {
            dot += *a[c] * *b[c];
            ++shared;
        }
    }
    return shared == 0 ? 0.0 : dot / static_cast<double>(shared);
}

Dataset imputeSimilarity(const Dataset& d, int k) {
    if (k < 1) throw ValidationError("k must be >= 1");
    const size_t rows = d.rowCount();
    const size_t features = d.featureCount();
    if (rows < static_cast<size_t>(k) + 1) {
        throw ValidationError("similarity imputation needs at least k+1 rows");
    }

    const EncodedMatrix enc = encodeForSimilarity(d);

    std::vector<Cell> cells;
    cells.reserve(rows * features);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t f = 0; f < features; ++f) cells.push_back(d.cell(r, f));
    }

    std::vector<double> sims(rows, 0.0);
    for (size_t r = 0; r < rows; ++r) {
        bool hasMissing = false;
        for (size_t f = 0; f < features; ++f) {
            if (!d.cell(r, f)) {
                hasMissing = true;
                break;
            }
        }
        if (!hasMissing) continue;

        for (size_t j = 0; j < rows; ++j) {
            if (j != r) sims[j] = similarity(enc, r, j);
        }

        for (size_t f = 0; f < features; ++f) {
            if (d.cell(r, f)) continue;
            std::vector<size_t> donors;
            for (size_t j = 0; j < rows; ++j) {
                if (j != r && d.cell(j, f)) donors.push_back(j);
            }
            if (donors.empty()) {
                throw DegenerateDataError("column " + d.column(f).name +
                                          " has no donor rows; apply a completion filter first");
            }
            std::sort(donors.begin(), donors.end(), [&](size_t a, size_t b) {
                if (sims[a] != sims[b]) return sims[a] > sims[b];
                return a < b;
            });
            if (donors.size() > static_cast<size_t>(k)) donors.resize(static_cast<size_t>(k));

            std::vector<double> donorValues;
            donorValues.reserve(donors.size());
            for (size_t j : donors) donorValues.push_back(*d.cell(j, f));

            double fill;
            if (d.column(f).kind == ColumnKind::Numerical) {
                double sum = 0.0;
                for (double v : donorValues) sum += v;
                fill = sum / static_cast<double>(donorValues.size());
            } else {
                fill = majorityCategoryId(donorValues, d.categoryCount(f));
            }
            cells[r * features + f] = fill;
        }
    }
    return d.withCells(std::move(cells));
}

}  // namespace uefs
