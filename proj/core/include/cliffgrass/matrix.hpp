#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cliffgrass/rational.hpp"

namespace cliffgrass {

/// Dense matrix of exact rationals, row-major. Matrices are plain values:
/// every operation returns a fresh matrix and never mutates its inputs.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    /// [[a, b], [c, d]] with equally sized square blocks.
    static Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
    /// block repeated `copies` times down the diagonal.
    static Matrix block_diagonal(const Matrix& block, std::size_t copies);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return a_; }

    Matrix transposed() const;
    Matrix operator-() const;
    Matrix scaled(const Rational& s) const;
    /// Submatrix copy, rows [r0, r0+h) x cols [c0, c0+w).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    bool is_zero() const;

    /// M v for a column vector v of length cols().
    std::vector<Rational> apply(std::span<const Rational> v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

Matrix operator*(const Rational& s, const Matrix& m);

}  // namespace cliffgrass
