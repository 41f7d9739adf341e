#pragma once

/**
 * Dense rational matrix with optional row/column labels.
 *
 * Storage is row-major. Labels are carried through transposition and
 * arithmetic (left operand wins for sums, product takes row labels from the
 * left factor and column labels from the right). Equality compares shapes
 * and entries only, never labels.
 */

#include "laddermat/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace laddermat {

/// Operand shapes do not conform (or a label list has the wrong length).
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested row/column label is absent or duplicated.
struct LabelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static RationalMatrix constant(std::size_t rows, std::size_t cols,
                                   const BigRational& value) {
        RationalMatrix m(rows, cols);
        for (auto& entry : m.data_)
            entry = value;
        return m;
    }

    /// The all-ones matrix J.
    static RationalMatrix all_ones(std::size_t rows, std::size_t cols) {
        return constant(rows, cols, 1);
    }

    /// The all-ones column vector.
    static RationalMatrix ones_column(std::size_t rows) {
        return constant(rows, 1, 1);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigRational& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const BigRational& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    BigRational& at(std::size_t r, std::size_t c) {
        check_bounds(r, c);
        return data_[r * cols_ + c];
    }
    const BigRational& at(std::size_t r, std::size_t c) const {
        check_bounds(r, c);
        return data_[r * cols_ + c];
    }

    /// Entry addressed by labels; raises LabelError when either is unknown.
    const BigRational& at(const std::string& row_label,
                          const std::string& col_label) const {
        return (*this)(row_index(row_label), col_index(col_label));
    }

    void set_row_labels(std::vector<std::string> labels) {
        if (labels.size() != rows_)
            throw ShapeError("set_row_labels: got " +
                             std::to_string(labels.size()) + " labels for " +
                             std::to_string(rows_) + " rows");
        check_distinct(labels);
        row_labels_ = std::move(labels);
    }

    void set_col_labels(std::vector<std::string> labels) {
        if (labels.size() != cols_)
            throw ShapeError("set_col_labels: got " +
                             std::to_string(labels.size()) + " labels for " +
                             std::to_string(cols_) + " columns");
        check_distinct(labels);
        col_labels_ = std::move(labels);
    }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    bool has_labels() const {
        return !row_labels_.empty() && !col_labels_.empty();
    }

    std::size_t row_index(const std::string& label) const {
        return find_label(row_labels_, label, "row");
    }
    std::size_t col_index(const std::string& label) const {
        return find_label(col_labels_, label, "column");
    }

    RationalMatrix transpose() const {
        RationalMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(c, r) = (*this)(r, c);
        out.row_labels_ = col_labels_;
        out.col_labels_ = row_labels_;
        return out;
    }

    /// Minor with one row and one column removed; labels follow.
    RationalMatrix minor_removed(std::size_t row, std::size_t col) const {
        check_bounds(row, col);
        RationalMatrix out(rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, ro = 0; r < rows_; ++r) {
            if (r == row)
                continue;
            for (std::size_t c = 0, co = 0; c < cols_; ++c) {
                if (c == col)
                    continue;
                out(ro, co) = (*this)(r, c);
                ++co;
            }
            ++ro;
        }
        if (!row_labels_.empty()) {
            auto labels = row_labels_;
            labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(row));
            out.row_labels_ = std::move(labels);
        }
        if (!col_labels_.empty()) {
            auto labels = col_labels_;
            labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(col));
            out.col_labels_ = std::move(labels);
        }
        return out;
    }

    bool is_symmetric() const {
        if (rows_ != cols_)
            return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r))
                    return false;
        return true;
    }

    BigRational trace() const {
        require_square("trace");
        BigRational sum = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            sum += (*this)(i, i);
        return sum;
    }

    BigRational grand_sum() const {
        BigRational sum = 0;
        for (const auto& entry : data_)
            sum += entry;
        return sum;
    }

    std::vector<BigRational> row_sums() const {
        std::vector<BigRational> sums(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                sums[r] += (*this)(r, c);
        return sums;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) {
        return !(a == b);
    }

    friend RationalMatrix operator+(const RationalMatrix& a,
                                    const RationalMatrix& b) {
        a.require_same_shape(b, "sum");
        RationalMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] += b.data_[i];
        return out;
    }

    friend RationalMatrix operator-(const RationalMatrix& a,
                                    const RationalMatrix& b) {
        a.require_same_shape(b, "difference");
        RationalMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] -= b.data_[i];
        return out;
    }

    friend RationalMatrix operator*(const RationalMatrix& a,
                                    const RationalMatrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeError("product: " + a.shape_string() + " times " +
                             b.shape_string());
        RationalMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const BigRational& left = a(r, k);
                if (left == 0)
                    continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    const BigRational& right = b(k, c);
                    if (right != 0)
                        out(r, c) += left * right;
                }
            }
        out.row_labels_ = a.row_labels_;
        out.col_labels_ = b.col_labels_;
        return out;
    }

    friend RationalMatrix operator*(const BigRational& scalar,
                                    const RationalMatrix& m) {
        RationalMatrix out = m;
        for (auto& entry : out.data_)
            entry *= scalar;
        return out;
    }

    std::string shape_string() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check_bounds(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("entry (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ") outside " +
                                    shape_string());
    }

    void require_square(const char* what) const {
        if (rows_ != cols_)
            throw ShapeError(std::string(what) + ": matrix is " +
                             shape_string());
    }

    void require_same_shape(const RationalMatrix& other,
                            const char* what) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw ShapeError(std::string(what) + ": " + shape_string() +
                             " vs " + other.shape_string());
    }

    static void check_distinct(const std::vector<std::string>& labels) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    throw LabelError("duplicate label '" + labels[i] + "'");
    }

    static std::size_t find_label(const std::vector<std::string>& labels,
                                  const std::string& label, const char* kind) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return i;
        throw LabelError("unknown " + std::string(kind) + " label '" + label +
                         "'");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> data_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

} // namespace laddermat
