#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uefs/matrix.hpp"

namespace uefs {

enum class ColumnKind { Numerical, Categorical };

// A cell is either a present value or missing. Categorical cells hold the
// dense category id as a double.
using Cell = std::optional<double>;

struct ColumnInfo {
    std::string name;
    ColumnKind kind = ColumnKind::Numerical;
};

struct CompletionStats {
    std::vector<double> perFeatureMissingRate;
    std::vector<double> perRowMissingRate;
};

// Column-typed table with an explicit missing mask and a binary outcome per
// row (1 = positive / minority class). Immutable after construction.
class Dataset {
public:
    Dataset(std::vector<ColumnInfo> columns, std::vector<Cell> cells, std::vector<int> outcomes,
            std::vector<std::string> outcomeLabels,
            std::vector<std::vector<std::string>> categoryLabels);

    size_t rowCount() const { return outcomes_.size(); }
    size_t featureCount() const { return columns_.size(); }

    const std::vector<ColumnInfo>& columns() const { return columns_; }
    const ColumnInfo& column(size_t feature) const { return columns_[feature]; }
    int findColumn(const std::string& name) const;

    const Cell& cell(size_t row, size_t feature) const {
        return cells_[row * columns_.size() + feature];
    }

    int outcome(size_t row) const { return outcomes_[row]; }
    const std::vector<int>& outcomes() const { return outcomes_; }
    const std::string& outcomeLabel(size_t row) const { return outcomeLabels_[row]; }

    size_t categoryCount(size_t feature) const { return categoryLabels_[feature].size(); }
    const std::vector<std::string>& categories(size_t feature) const {
        return categoryLabels_[feature];
    }

    size_t missingCellCount() const;
    bool complete() const { return missingCellCount() == 0; }
    size_t positiveCount() const;

    // Same shape and metadata, new cell values.
    Dataset withCells(std::vector<Cell> cells) const;
    Dataset selectRows(const std::vector<size_t>& rowIds) const;

private:
    std::vector<ColumnInfo> columns_;
    std::vector<Cell> cells_;  // row-major
    std::vector<int> outcomes_;
    std::vector<std::string> outcomeLabels_;
    std::vector<std::vector<std::string>> categoryLabels_;  // empty vector for numerical
};

enum class ColumnRole { Numerical, Categorical, Outcome, Drop };

struct SchemaEntry {
    std::string name;
    ColumnRole role = ColumnRole::Numerical;
};

// Column declarations plus ingestion settings. Schema files carry one
// `name,kind` line per column with kind in {num, cat, outcome, drop}.
struct CsvSchema {
    std::vector<SchemaEntry> entries;
    std::string positiveLabel = "1";
    std::vector<std::string> missingTokens = {"", "NA"};

    static CsvSchema load(const std::string& path);
    void save(const std::string& path) const;
};

Dataset ingestCsv(const std::string& path, const CsvSchema& schema);

// Two-pass completion filter: drop features with completion rate < p, then
// rows whose completion over the surviving features is < p.
Dataset filterByCompletion(const Dataset& d, double p);

CompletionStats completionStats(const Dataset& d);

// Min-max normalized numericals plus one-hot expanded categoricals, with the
// missing mask carried through; used by similarity-based imputation.
struct EncodedMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Cell> cells;            // row-major
    std::vector<size_t> sourceFeature;  // encoded column -> dataset feature

    const Cell& at(size_t row, size_t col) const { return cells[row * cols + col]; }
};

EncodedMatrix encodeForSimilarity(const Dataset& d);

// Dense matrix view of a complete dataset (categorical cells as their ids).
Matrix toMatrix(const Dataset& d);

void writeCsv(const Dataset& d, const std::string& path, const std::string& missingToken = "NA");
void writeSchema(const Dataset& d, const std::string& path, const std::string& outcomeName = "outcome");

}  // namespace uefs
