#ifndef CARTPROD_MATRIX_HPP
#define CARTPROD_MATRIX_HPP

#include <vector>

#include "cartprod/scalar.hpp"

namespace cartprod {

/// Dense exact matrix, just big enough for the Gram / discriminant work.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)), field_(f) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const Field& field() const { return field_; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& o) const;

    Scalar det() const;        // square only
    std::size_t rank() const;  // Gaussian elimination, exact
    /// Inverse of a square matrix; throws on singular input.
    Matrix inverse() const;

    static Matrix identity(std::size_t n, const Field& f);

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
    Field field_;
};

} // namespace cartprod

#endif
