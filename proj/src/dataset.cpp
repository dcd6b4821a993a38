#include "uefs/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "uefs/error.hpp"

namespace uefs {
namespace {

// RFC-4180-style reader: quoted fields may contain commas, escaped quotes
// ("") and newlines. Accepts LF and CRLF line endings.
std::vector<std::vector<std::string>> parseCsv(std::istream& in, const std::string& path) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool inQuotes = false;
    bool fieldStarted = false;
    char ch;
    while (in.get(ch)) {
        if (inQuotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    inQuotes = false;
                }
            } else {
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
            case '"':
                if (field.empty() && !fieldStarted) {
                    inQuotes = true;
                    fieldStarted = true;
                } else {
                    field.push_back(ch);
                }
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                fieldStarted = false;
                break;
            case '\r':
                break;
            case '\n':
                row.push_back(std::move(field));
                field.clear();
                fieldStarted = false;
                rows.push_back(std::move(row));
                row.clear();
                break;
            default:
                field.push_back(ch);
                fieldStarted = true;
        }
    }
    if (inQuotes) {
        throw IngestionError(path + ": unterminated quoted field");
    }
    if (fieldStarted || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool isMissingToken(const std::string& value, const std::vector<std::string>& tokens) {
    return std::find(tokens.begin(), tokens.end(), value) != tokens.end();
}

std::string formatValue(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csvQuote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

Dataset::Dataset(std::vector<ColumnInfo> columns, std::vector<Cell> cells,
                 std::vector<int> outcomes, std::vector<std::string> outcomeLabels,
                 std::vector<std::vector<std::string>> categoryLabels)
    : columns_(std::move(columns)),
      cells_(std::move(cells)),
      outcomes_(std::move(outcomes)),
      outcomeLabels_(std::move(outcomeLabels)),
      categoryLabels_(std::move(categoryLabels)) {
    if (outcomes_.empty()) {
        throw DegenerateDataError("dataset has no rows");
    }
    if (cells_.size() != outcomes_.size() * columns_.size()) {
        throw ValidationError("dataset cell count does not match rows x columns");
    }
    if (outcomeLabels_.size() != outcomes_.size()) {
        throw ValidationError("dataset outcome label count does not match rows");
    }
    if (categoryLabels_.size() != columns_.size()) {
        throw ValidationError("dataset category map count does not match columns");
    }
    for (int y : outcomes_) {
        if (y != 0 && y != 1) throw ValidationError("outcomes must be 0 or 1");
    }
    for (size_t f = 0; f < columns_.size(); ++f) {
        if (columns_[f].kind != ColumnKind::Categorical) continue;
        const double count = static_cast<double>(categoryLabels_[f].size());
        for (size_t r = 0; r < outcomes_.size(); ++r) {
            const Cell& c = cell(r, f);
            if (c && (*c < 0.0 || *c >= count || *c != std::floor(*c))) {
                throw ValidationError("category id out of range in column " + columns_[f].name);
            }
        }
    }
}

int Dataset::findColumn(const std::string& name) const {
    for (size_t f = 0; f < columns_.size(); ++f) {
        if (columns_[f].name == name) return static_cast<int>(f);
    }
    return -1;
}

size_t Dataset::missingCellCount() const {
    size_t count = 0;
    for (const Cell& c : cells_) {
        if (!c) ++count;
    }
    return count;
}

size_t Dataset::positiveCount() const {
    size_t count = 0;
    for (int y : outcomes_) count += static_cast<size_t>(y);
    return count;
}

Dataset Dataset::withCells(std::vector<Cell> cells) const {
    if (cells.size() != cells_.size()) {
        throw ValidationError("replacement cells have the wrong shape");
    }
    return Dataset(columns_, std::move(cells), outcomes_, outcomeLabels_, categoryLabels_);
}

Dataset Dataset::selectRows(const std::vector<size_t>& rowIds) const {
    std::vector<Cell> cells;
    cells.reserve(rowIds.size() * columns_.size());
    std::vector<int> outcomes;
    std::vector<std::string> labels;
    for (size_t r : rowIds) {
        for (size_t f = 0; f < columns_.size(); ++f) cells.push_back(cell(r, f));
        outcomes.push_back(outcomes_[r]);
        labels.push_back(outcomeLabels_[r]);
    }
    return Dataset(columns_, std::move(cells), std::move(outcomes), std::move(labels),
                   categoryLabels_);
}

CsvSchema CsvSchema::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestionError("cannot open schema file: " + path);
    CsvSchema schema;
    std::string line;
    size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.rfind(',');
        if (comma == std::string::npos) {
            throw IngestionError(path + ":" + std::to_string(lineNo) +
                                 ": expected `name,kind`");
        }
        SchemaEntry entry;
        entry.name = line.substr(0, comma);
        std::string kind = line.substr(comma + 1);
        if (kind == "num") entry.role = ColumnRole::Numerical;
        else if (kind == "cat") entry.role = ColumnRole::Categorical;
        else if (kind == "outcome") entry.role = ColumnRole::Outcome;
        else if (kind == "drop") entry.role = ColumnRole::Drop;
        else {
            throw IngestionError(path + ":" + std::to_string(lineNo) + ": unknown kind `" +
                                 kind + "`");
        }
        schema.entries.push_back(std::move(entry));
    }
    return schema;
}

void CsvSchema::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IngestionError("cannot write schema file: " + path);
    for (const SchemaEntry& e : entries) {
        const char* kind = "num";
        switch (e.role) {
            case ColumnRole::Numerical: kind = "num"; break;
            case ColumnRole::Categorical: kind = "cat"; break;
            case ColumnRole::Outcome: kind = "outcome"; break;
            case ColumnRole::Drop: kind = "drop"; break;
        }
        out << e.name << ',' << kind << '\n';
    }
}

Dataset ingestCsv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestionError("cannot open CSV file: " + path);
    auto rows = parseCsv(in, path);
    if (rows.empty()) throw IngestionError(path + ": missing header row");

    const std::vector<std::string>& header = rows.front();
    std::unordered_map<std::string, ColumnRole> roleByName;
    for (const SchemaEntry& e : schema.entries) {
        if (!roleByName.emplace(e.name, e.role).second) {
            throw IngestionError("schema declares column twice: " + e.name);
        }
    }
    for (const SchemaEntry& e : schema.entries) {
        if (std::find(header.begin(), header.end(), e.name) == header.end()) {
            throw IngestionError("schema column not present in CSV: " + e.name);
        }
    }

    int outcomeCol = -1;
    std::vector<ColumnInfo> columns;
    std::vector<int> featureCsvCol;
    for (size_t c = 0; c < header.size(); ++c) {
        auto it = roleByName.find(header[c]);
        if (it == roleByName.end()) {
            throw IngestionError("CSV column not declared in schema: " + header[c]);
        }
        switch (it->second) {
            case ColumnRole::Drop:
                break;
            case ColumnRole::Outcome:
                if (outcomeCol >= 0) {
                    throw IngestionError("schema declares more than one outcome column");
                }
                outcomeCol = static_cast<int>(c);
                break;
            case ColumnRole::Numerical:
                columns.push_back({header[c], ColumnKind::Numerical});
                featureCsvCol.push_back(static_cast<int>(c));
                break;
            case ColumnRole::Categorical:
                columns.push_back({header[c], ColumnKind::Categorical});
                featureCsvCol.push_back(static_cast<int>(c));
                break;
        }
    }
    if (outcomeCol < 0) throw IngestionError("schema declares no outcome column");

    const size_t nFeatures = columns.size();
    std::vector<Cell> cells;
    std::vector<int> outcomes;
    std::vector<std::string> outcomeLabels;
    std::vector<std::vector<std::string>> categoryLabels(nFeatures);
    std::vector<std::unordered_map<std::string, double>> categoryIds(nFeatures);

    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size()) {
            throw IngestionError(path + ": row " + std::to_string(r) + " has " +
                                 std::to_string(row.size()) + " fields, expected " +
                                 std::to_string(header.size()));
        }
        const std::string& outcomeValue = row[outcomeCol];
        if (isMissingToken(outcomeValue, schema.missingTokens)) {
            throw IngestionError(path + ": row " + std::to_string(r) +
                                 ": outcome value is missing");
        }
        outcomes.push_back(outcomeValue == schema.positiveLabel ? 1 : 0);
        outcomeLabels.push_back(outcomeValue);
        for (size_t f = 0; f < nFeatures; ++f) {
            const std::string& value = row[featureCsvCol[f]];
            if (isMissingToken(value, schema.missingTokens)) {
                cells.emplace_back(std::nullopt);
                continue;
            }
            if (columns[f].kind == ColumnKind::Numerical) {
                double parsed = 0.0;
                auto res = std::from_chars(value.data(), value.data() + value.size(), parsed);
                if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
                    throw IngestionError(path + ": row " + std::to_string(r) + ", column " +
                                         columns[f].name + ": cannot parse `" + value +
                                         "` as a number");
                }
                cells.emplace_back(parsed);
            } else {
                auto [it, inserted] = categoryIds[f].emplace(
                    value, static_cast<double>(categoryLabels[f].size()));
                if (inserted) categoryLabels[f].push_back(value);
                cells.emplace_back(it->second);
            }
        }
    }
    if (outcomes.empty()) throw IngestionError(path + ": no data rows");
    return Dataset(std::move(columns), std::move(cells), std::move(outcomes),
                   std::move(outcomeLabels), std::move(categoryLabels));
}

CompletionStats completionStats(const Dataset& d) {
    CompletionStats stats;
    const size_t rows = d.rowCount();
    const size_t features = d.featureCount();
    stats.perFeatureMissingRate.assign(features, 0.0);
    stats.perRowMissingRate.assign(rows, 0.0);
    for (size_t r = 0; r < rows; ++r) {
        size_t rowMissing = 0;
        for (size_t f = 0; f < features; ++f) {
            if (!d.cell(r, f)) {
                stats.perFeatureMissingRate[f] += 1.0;
                ++rowMissing;
            }
        }
        stats.perRowMissingRate[r] =
            features == 0 ? 0.0 : static_cast<double>(rowMissing) / static_cast<double>(features);
    }
    for (double& rate : stats.perFeatureMissingRate) rate /= static_cast<double>(rows);
    return stats;
}

Dataset filterByCompletion(const Dataset& d, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("completion threshold must lie in [0, 1]");
    }
    const CompletionStats stats = completionStats(d);

    std::vector<size_t> keptFeatures;
    for (size_t f = 0; f < d.featureCount(); ++f) {
        if (1.0 - stats.perFeatureMissingRate[f] >= p) keptFeatures.push_back(f);
    }
    if (keptFeatures.empty()) {
        throw DegenerateDataError("completion filter dropped every feature column");
    }

    std::vector<size_t> keptRows;
    for (size_t r = 0; r < d.rowCount(); ++r) {
        size_t present = 0;
        for (size_t f : keptFeatures) {
            if (d.cell(r, f)) ++present;
        }
        double completion = static_cast<double>(present) / static_cast<double>(keptFeatures.size());
        if (completion >= p) keptRows.push_back(r);
    }
    if (keptRows.empty()) {
        throw DegenerateDataError("completion filter dropped every row");
    }

    std::vector<ColumnInfo> columns;
    std::vector<std::vector<std::string>> categoryLabels;
    for (size_t f : keptFeatures) {
        columns.push_back(d.column(f));
        categoryLabels.push_back(d.categories(f));
    }
    std::vector<Cell> cells;
    cells.reserve(keptRows.size() * keptFeatures.size());
    std::vector<int> outcomes;
    std::vector<std::string> outcomeLabels;
    for (size_t r : keptRows) {
        for (size_t f : keptFeatures) cells.push_back(d.cell(r, f));
        outcomes.push_back(d.outcome(r));
        outcomeLabels.push_back(d.outcomeLabel(r));
    }
    return Dataset(std::move(columns), std::move(cells), std::move(outcomes),
                   std::move(outcomeLabels), std::move(categoryLabels));
}

EncodedMatrix encodeForSimilarity(const Dataset& d) {
    EncodedMatrix enc;
    enc.rows = d.rowCount();

    std::vector<double> minVal(d.featureCount(), 0.0);
    std::vector<double> range(d.featureCount(), 0.0);
    for (size_t f = 0; f < d.featureCount(); ++f) {
        if (d.column(f).kind != ColumnKind::Numerical) {
            enc.cols += d.categoryCount(f);
            continue;
        }
        enc.cols += 1;
        bool seen = false;
        double lo = 0.0, hi = 0.0;
        for (size_t r = 0; r < d.rowCount(); ++r) {
            const Cell& c = d.cell(r, f);
            if (!c) continue;
            if (!seen) {
                lo = hi = *c;
                seen = true;
            } else {
                lo = std::min(lo, *c);
                hi = std::max(hi, *c);
            }
        }
        minVal[f] = lo;
        range[f] = hi - lo;
    }

    enc.cells.assign(enc.rows * enc.cols, std::nullopt);
    enc.sourceFeature.assign(enc.cols, 0);

    size_t col = 0;
    for (size_t f = 0; f < d.featureCount(); ++f) {
        if (d.column(f).kind == ColumnKind::Numerical) {
            enc.sourceFeature[col] = f;
            for (size_t r = 0; r < d.rowCount(); ++r) {
                const Cell& c = d.cell(r, f);
                if (!c) continue;
                double v = range[f] > 0.0 ? (*c - minVal[f]) / range[f] : 0.0;
                enc.cells[r * enc.cols + col] = v;
            }
            ++col;
        } else {
            const size_t nCats = d.categoryCount(f);
            for (size_t j = 0; j < nCats; ++j) enc.sourceFeature[col + j] = f;
            for (size_t r = 0; r < d.rowCount(); ++r) {
                const Cell& c = d.cell(r, f);
                if (!c) continue;
                const size_t id = static_cast<size_t>(*c);
                for (size_t j = 0; j < nCats; ++j) {
                    enc.cells[r * enc.cols + col + j] = (j == id) ? 1.0 : 0.0;
                }
            }
            col += nCats;
        }
    }
    return enc;
}

Matrix toMatrix(const Dataset& d) {
    Matrix m(d.rowCount(), d.featureCount());
    for (size_t r = 0; r < d.rowCount(); ++r) {
        for (size_t f = 0; f < d.featureCount(); ++f) {
            const Cell& c = d.cell(r, f);
            if (!c) throw ValidationError("toMatrix requires a complete dataset");
            m.at(r, f) = *c;
        }
    }
    return m;
}

void writeCsv(const Dataset& d, const std::string& path, const std::string& missingToken) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IngestionError("cannot write CSV file: " + path);
    for (size_t f = 0; f < d.featureCount(); ++f) {
        out << csvQuote(d.column(f).name) << ',';
    }
    out << "outcome\n";
    for (size_t r = 0; r < d.rowCount(); ++r) {
        for (size_t f = 0; f < d.featureCount(); ++f) {
            const Cell& c = d.cell(r, f);
            if (!c) {
                out << missingToken;
            } else if (d.column(f).kind == ColumnKind::Categorical) {
                out << csvQuote(d.categories(f)[static_cast<size_t>(*c)]);
            } else {
                out << formatValue(*c);
            }
            out << ',';
        }
        out << csvQuote(d.outcomeLabel(r)) << '\n';
    }
}

void writeSchema(const Dataset& d, const std::string& path, const std::string& outcomeName) {
    CsvSchema schema;
    for (const ColumnInfo& col : d.columns()) {
        schema.entries.push_back(
            {col.name, col.kind == ColumnKind::Numerical ? ColumnRole::Numerical
                                                         : ColumnRole::Categorical});
    }
    schema.entries.push_back({outcomeName, ColumnRole::Outcome});
    schema.save(path);
}

}  // namespace uefs
