#pragma once

#include <cstddef>
#include <vector>

namespace uefs {

// Dense row-major matrix of complete (post-imputation) feature values.
struct Matrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double at(size_t r, size_t c) const { return data[r * cols + c]; }
    double& at(size_t r, size_t c) { return data[r * cols + c]; }

    Matrix selectRows(const std::vector<size_t>& rowIds) const {
        Matrix out(rowIds.size(), cols);
        for (size_t i = 0; i < rowIds.size(); ++i) {
            for (size_t c = 0; c < cols; ++c) out.at(i, c) = at(rowIds[i], c);
        }
        return out;
    }

    Matrix selectCols(const std::vector<size_t>& colIds) const {
        Matrix out(rows, colIds.size());
        for (size_t r = 0; r < rows; ++r) {
            for (size_t j = 0; j < colIds.size(); ++j) out.at(r, j) = at(r, colIds[j]);
        }
        return out;
    }
};

}  // namespace uefs
