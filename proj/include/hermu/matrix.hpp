#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hermu/ring.hpp"

namespace hermu {

using IntVec = std::vector<Int>;

/// Dense row-major integer matrix. Used for variable substitutions
/// x -> T x (T is target_arity x source_arity) and for doubled Gram matrices.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVec>& columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec column(std::size_t j) const;
    IntVec apply(std::span<const Int> x) const;
    IntMatrix transpose() const;
    /// Top-left (0,0) block of `other` copied to (row, col).
    void place(const IntMatrix& other, std::size_t row, std::size_t col);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// "[[a,b],[c,d]]"
    std::string to_string() const;
    std::vector<IntVec> to_rows() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVec data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Determinant of the submatrix with the given row and column indices.
Int minor_determinant(const IntMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

}  // namespace hermu
