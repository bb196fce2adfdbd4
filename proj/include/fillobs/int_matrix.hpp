#pragma once
#include <initializer_list>
#include <vector>

#include "fillobs/bigint.hpp"

namespace fillobs {

// Dense exact integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    // row_i += c * row_j  /  col_i += c * col_j
    void addmul_row(int i, int j, const Int& c);
    void addmul_col(int i, int j, const Int& c);

    std::vector<Int> row(int i) const;
    IntMatrix multiplied(const IntMatrix& rhs) const;
    IntMatrix vstacked(const IntMatrix& below) const;

    // Exact determinant (Bareiss fraction-free elimination); square input.
    Int determinant() const;

    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

// Row vector times matrix: (1 x rows) * (rows x cols).
std::vector<Int> vec_times_matrix(const std::vector<Int>& v, const IntMatrix& m);

} // namespace fillobs
