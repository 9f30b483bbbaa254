#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "cliffgrass/matrix.hpp"
#include "cliffgrass/rational.hpp"

namespace cliffgrass {

/// Quaternion with exact rational coordinates in the basis (1, i, j, k),
/// Hamilton convention: ij = k, jk = i, ki = j.
class Quaternion {
public:
    Quaternion() = default;
    explicit Quaternion(std::array<Rational, 4> c) : c_(std::move(c)) {}
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    /// Basis element by index: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
    static Quaternion basis(std::size_t t);

    const Rational& coord(std::size_t t) const { return c_[t]; }
    const std::array<Rational, 4>& coords() const { return c_; }

    Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
    Rational norm_sq() const;

    Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Rational& s, const Quaternion& a);
    friend bool operator==(const Quaternion& a, const Quaternion& b) = default;

    /// 4x4 matrix of x -> x * q in the basis (1, i, j, k).
    static Matrix right_mult_matrix(const Quaternion& q);
    /// 4x4 matrix of x -> q * x.
    static Matrix left_mult_matrix(const Quaternion& q);

private:
    std::array<Rational, 4> c_{};
};

/// Octonion with exact rational coordinates in the ordered basis
/// (1, i, j, k, e, f, g, h). The product is the Cayley-Dickson doubling of
/// the quaternions with e = (0, 1), f = (0, i), g = (0, j), h = (0, k):
///
///   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
class Octonion {
public:
    Octonion() = default;
    explicit Octonion(std::array<Rational, 8> c) : c_(std::move(c)) {}
    Octonion(const Quaternion& a, const Quaternion& b);

    /// Basis element by index 0..7 in the order (1, i, j, k, e, f, g, h).
    static Octonion basis(std::size_t t);
    static constexpr std::size_t dimension = 8;
    /// "1", "i", ..., "h".
    static const std::string& basis_name(std::size_t t);

    const Rational& coord(std::size_t t) const { return c_[t]; }
    const std::array<Rational, 8>& coords() const { return c_; }

    /// First (resp. second) quaternion of the Cayley-Dickson pair.
    Quaternion first() const { return {c_[0], c_[1], c_[2], c_[3]}; }
    Quaternion second() const { return {c_[4], c_[5], c_[6], c_[7]}; }

    Octonion conj() const;
    Rational norm_sq() const;
    bool is_zero() const;

    Octonion operator-() const;
    friend Octonion operator+(const Octonion& a, const Octonion& b);
    friend Octonion operator-(const Octonion& a, const Octonion& b);
    friend Octonion operator*(const Octonion& a, const Octonion& b);
    friend Octonion operator*(const Rational& s, const Octonion& a);
    friend bool operator==(const Octonion& a, const Octonion& b) = default;

    std::string str() const;

private:
    std::array<Rational, 8> c_{};
};

/// Euclidean inner product of the coordinate vectors.
Rational inner(const Octonion& a, const Octonion& b);

/// 8x8 matrix of x -> x * u in the ordered basis.
Matrix right_mult_matrix(const Octonion& u);
/// 8x8 matrix of x -> u * x.
Matrix left_mult_matrix(const Octonion& u);

/// Checks the identity (z conj(v)) u = -(z conj(u)) v, which holds whenever
/// u and v are orthogonal. Throws PreconditionError when <u, v> != 0.
bool orthogonal_identity_check(const Octonion& z, const Octonion& u, const Octonion& v);

}  // namespace cliffgrass
