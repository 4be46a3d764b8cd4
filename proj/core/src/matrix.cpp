#include "cartprod/matrix.hpp"

#include <stdexcept>

namespace cartprod {

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Scalar acc = Scalar::zero(field_);
            for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    Matrix a(*this);
    Scalar d = Scalar::one(field_);
    for (std::size_t col = 0, row = 0; col < cols_ && row < rows_; ++col, ++row) {
        std::size_t pivot = row;
        while (pivot < rows_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return Scalar::zero(field_);
        if (pivot != row) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(a.at(pivot, c), a.at(row, c));
            d = -d;
        }
        d = d * a.at(row, col);
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t r = row + 1; r < rows_; ++r) {
            if (a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c)
                a.at(r, c) = a.at(r, c) - factor * a.at(row, c);
        }
    }
    return d;
}

std::size_t Matrix::rank() const {
    Matrix a(*this);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
        Scalar inv = a.at(rank, col).inverse();
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c)
                a.at(r, c) = a.at(r, c) - factor * a.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Matrix a(*this);
    Matrix inv = identity(rows_, field_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) throw std::domain_error("singular matrix");
        if (pivot != col)
            for (std::size_t c = 0; c < cols_; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        Scalar s = a.at(col, col).inverse();
        for (std::size_t c = 0; c < cols_; ++c) {
            a.at(col, c) = a.at(col, c) * s;
            inv.at(col, c) = inv.at(col, c) * s;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col);
            for (std::size_t c = 0; c < cols_; ++c) {
                a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
                inv.at(r, c) = inv.at(r, c) - factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

} // namespace cartprod
