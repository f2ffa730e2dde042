#pragma once

#include <cstddef>
#include <vector>

namespace bfaelm {

// Dense row-major matrix of finite doubles. Immutable-by-convention after
// construction; all mutation goes through set() before sharing.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, double v);

    const std::vector<double>& data() const { return data_; }

    // Entrywise finiteness check; throws if any NaN/Inf present.
    void require_finite() const;

    bool operator==(const Matrix& other) const = default;

    static Matrix identity(std::size_t n);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

}  // namespace bfaelm
