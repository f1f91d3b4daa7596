#include "kflag/matrix.hpp"

#include "kflag/errors.hpp"

namespace kflag {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int j = 0; j < n; ++j) m(j, j) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix sum shape mismatch");
    for (size_t j = 0; j < a_.size(); ++j) a_[j] += o.a_[j];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix difference shape mismatch");
    for (size_t j = 0; j < a_.size(); ++j) a_[j] -= o.a_[j];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InternalError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int t = 0; t < a.cols_; ++t) {
            const Rational& x = a(r, t);
            if (x == 0) continue;
            for (int c = 0; c < b.cols_; ++c)
                if (b(t, c) != 0) out(r, c) += x * b(t, c);
        }
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::optional<MatrixDiff> first_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InternalError("comparing matrices of different shape");
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a(r, c) != b(r, c)) return MatrixDiff{r, c, a(r, c), b(r, c)};
    return std::nullopt;
}

}
