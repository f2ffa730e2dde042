#include "bfaelm/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bfaelm {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("Matrix: rows and cols must be >= 1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("Matrix: rows and cols must be >= 1");
    if (data_.size() != rows * cols)
        throw std::invalid_argument("Matrix: entry count " + std::to_string(data_.size()) +
                                    " != " + std::to_string(rows * cols));
    require_finite();
}

void Matrix::set(std::size_t r, std::size_t c, double v) {
    if (!std::isfinite(v))
        throw std::invalid_argument("Matrix::set: non-finite value");
    data_[r * cols_ + c] = v;
}

void Matrix::require_finite() const {
    for (double v : data_)
        if (!std::isfinite(v))
            throw std::invalid_argument("Matrix: non-finite entry");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

}  // namespace bfaelm
