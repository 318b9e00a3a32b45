#pragma once

#include "tsk/numeric.hpp"

#include <cstddef>
#include <vector>

namespace tsk {

// Dense integer matrix, row-major, exact arithmetic throughout.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IVec>& rows, std::size_t cols);
    static IntMatrix from_cols(const std::vector<IVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IVec row(std::size_t i) const;
    IVec col(std::size_t j) const;
    std::vector<IVec> row_list() const;
    std::vector<IVec> col_list() const;

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;
    IVec apply(const IVec& x) const; // this * x (column vector)

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int& c);
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_zero() const;
    Int det() const; // Bareiss fraction-free elimination; square only

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

} // namespace tsk
