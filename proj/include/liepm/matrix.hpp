#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "liepm/scalar.hpp"

namespace liepm {

/// Dense row-major matrix over Scalar.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }
    /// True iff the matrix is lambda * identity for some lambda.
    bool is_scalar() const;
    Scalar trace() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& v);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, std::size_t n);

struct Echelon {
    Matrix rref;                        // nonzero rows only
    std::vector<std::size_t> pivots;    // strictly increasing
};

/// Reduced row echelon form; zero rows dropped.
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
/// Some solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::string to_string(const Matrix& m);

}  // namespace liepm
