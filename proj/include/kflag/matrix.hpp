#pragma once

#include "kflag/polyring.hpp"

#include <optional>
#include <vector>

namespace kflag {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    bool operator==(const Matrix& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

struct MatrixDiff {
    int row;
    int col;
    Rational lhs;
    Rational rhs;
};

// first differing entry in row-major order
std::optional<MatrixDiff> first_difference(const Matrix& a, const Matrix& b);

}
