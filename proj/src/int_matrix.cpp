#include "fillobs/int_matrix.hpp"

#include <utility>

#include "fillobs/error.hpp"

namespace fillobs {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) fail(ErrorKind::Dimension, "negative matrix dimension");
    data_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            fail(ErrorKind::Dimension, "ragged initializer for IntMatrix");
        for (long long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    IntMatrix m;
    m.rows_ = static_cast<int>(rows.size());
    m.cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    m.data_.reserve(static_cast<size_t>(m.rows_) * m.cols_);
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != m.cols_)
            fail(ErrorKind::Dimension, "ragged row list for IntMatrix");
        for (auto& v : r) m.data_.push_back(std::move(v));
    }
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j) {
    for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::addmul_row(int i, int j, const Int& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::addmul_col(int i, int j, const Int& c) {
    for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> r(cols_);
    for (int k = 0; k < cols_; ++k) r[k] = at(i, k);
    return r;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) fail(ErrorKind::Dimension, "matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

IntMatrix IntMatrix::vstacked(const IntMatrix& below) const {
    if (rows_ == 0 && cols_ == 0) return below;
    if (below.rows_ == 0 && below.cols_ == 0) return *this;
    if (cols_ != below.cols_) fail(ErrorKind::Dimension, "vstack column mismatch");
    IntMatrix out(rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
    return out;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) fail(ErrorKind::Dimension, "determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::vector<Int> vec_times_matrix(const std::vector<Int>& v, const IntMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows())
        fail(ErrorKind::Dimension, "vector/matrix shape mismatch");
    std::vector<Int> out(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) {
            const Int& e = m.at(i, j);
            if (e != 0) out[j] += v[i] * e;
        }
    }
    return out;
}

} // namespace fillobs
