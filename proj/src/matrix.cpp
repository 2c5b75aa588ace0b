#include "liepm/matrix.hpp"

#include <utility>

#include "liepm/errors.hpp"

namespace liepm {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionMismatch("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionMismatch("row length differs from column count");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        m.set_column(c, cols[c]);
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) {
        throw DimensionMismatch("column length differs from row count");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_scalar() const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && (*this)(r, c) != 0) {
                return false;
            }
            if (r == c && (*this)(r, c) != (*this)(0, 0)) {
                return false;
            }
        }
    }
    return true;
}

Scalar Matrix::trace() const {
    if (!is_square()) {
        throw DimensionMismatch("trace of a non-square matrix");
    }
    Scalar t = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matrix product shape mismatch");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("matrix sum shape mismatch");
    }
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j) + b(i, j);
        }
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = c * m(i, j);
        }
    }
    return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols() != v.size()) {
        throw DimensionMismatch("matrix-vector shape mismatch");
    }
    Vector out(m.rows(), Scalar(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (v[j] != 0) {
                out[i] += m(i, j) * v[j];
            }
        }
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& m, std::size_t n) {
    Matrix out = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < n; ++i) {
        out = out * m;
    }
    return out;
}

Echelon row_reduce(const Matrix& input) {
    Matrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c) == 0) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != lead_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(p, j), m(lead_row, j));
            }
        }
        const Scalar inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(lead_row, j) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c) == 0) {
                continue;
            }
            const Scalar f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(r, j) -= f * m(lead_row, j);
            }
        }
        pivots.push_back(c);
        ++lead_row;
    }
    Matrix rref(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rref(r, j) = m(r, j);
        }
    }
    return {std::move(rref), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Scalar determinant(const Matrix& input) {
    if (!input.is_square()) {
        throw DimensionMismatch("determinant of a non-square matrix");
    }
    Matrix m = input;
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
            }
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) {
                continue;
            }
            const Scalar f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) {
                m(r, j) -= f * m(c, j);
            }
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) {
        throw DimensionMismatch("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = 1;
    }
    const Echelon e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
        return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = e.rref(i, n + j);
        }
    }
    return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v(m.cols(), Scalar(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            v[e.pivots[r]] = -e.rref(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) {
        throw DimensionMismatch("right-hand side length differs from row count");
    }
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, m.cols()) = b[i];
    }
    const Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    Vector x(m.cols(), Scalar(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        x[e.pivots[r]] = e.rref(r, m.cols());
    }
    return x;
}

std::string to_string(const Matrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) {
                out += ", ";
            }
            out += to_string(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace liepm
