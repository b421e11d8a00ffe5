#include "hermu/matrix.hpp"

#include <sstream>
#include <utility>

namespace hermu {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::ArityMismatch, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw Error(ErrorKind::ArityMismatch, "column length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

IntVec IntMatrix::column(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntVec IntMatrix::apply(std::span<const Int> x) const {
    if (x.size() != cols_) throw Error(ErrorKind::ArityMismatch, "matrix-vector product");
    IntVec y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int128 acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<Int128>((*this)(i, j)) * x[j];
        y[i] = checked::narrow(acc);
    }
    return y;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::place(const IntMatrix& other, std::size_t row, std::size_t col) {
    if (row + other.rows_ > rows_ || col + other.cols_ > cols_)
        throw Error(ErrorKind::ArityMismatch, "block does not fit");
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) (*this)(row + i, col + j) = other(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ArityMismatch, "matrix product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Int128 acc = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) acc += static_cast<Int128>(a(i, k)) * b(k, j);
            c(i, j) = checked::narrow(acc);
        }
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<IntVec> IntMatrix::to_rows() const {
    std::vector<IntVec> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    return out;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::ArityMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int128>> a(n, std::vector<Int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    Int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return checked::narrow(sign * a[n - 1][n - 1]);
}

Int minor_determinant(const IntMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    if (rows.size() != cols.size()) throw Error(ErrorKind::ArityMismatch, "minor must be square");
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    return determinant(sub);
}

}  // namespace hermu
