#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliffgrass/error.hpp"
#include "cliffgrass/rational.hpp"

namespace cliffgrass {

/// Complex number with exact rational real and imaginary parts.
struct GaussComplex {
    Rational re;
    Rational im;

    GaussComplex() = default;
    GaussComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussComplex(int r) : re(r) {}

    static GaussComplex i() { return GaussComplex(0, 1); }
    GaussComplex(Rational r) : re(std::move(r)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussComplex conj() const { return {re, -im}; }

    GaussComplex& operator+=(const GaussComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussComplex& operator-=(const GaussComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussComplex operator+(GaussComplex a, const GaussComplex& b) { return a += b; }
    friend GaussComplex operator-(GaussComplex a, const GaussComplex& b) { return a -= b; }
    friend GaussComplex operator*(const GaussComplex& a, const GaussComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussComplex operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussComplex& a, const GaussComplex& b) = default;

    std::string str() const;
};

/// Dense matrix over the Gaussian rationals; just enough surface for the
/// complexified operators and their fixture comparisons.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GaussComplex& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    GaussComplex& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    ComplexMatrix conjugate_transposed() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussComplex> a_;
};

}  // namespace cliffgrass
