#include "cliffgrass/octonion.hpp"

#include "cliffgrass/error.hpp"

namespace cliffgrass {

Quaternion Quaternion::basis(std::size_t t) {
    Quaternion q;
    q.c_[t] = 1;
    return q;
}

Rational Quaternion::norm_sq() const {
    Rational s;
    for (const auto& x : c_) s += x * x;
    return s;
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    const auto& p = a.c_;
    const auto& q = b.c_;
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quaternion operator*(const Rational& s, const Quaternion& a) {
    return {s * a.c_[0], s * a.c_[1], s * a.c_[2], s * a.c_[3]};
}

Matrix Quaternion::right_mult_matrix(const Quaternion& q) {
    Matrix m(4, 4);
    for (std::size_t t = 0; t < 4; ++t) {
        const Quaternion col = basis(t) * q;
        for (std::size_t r = 0; r < 4; ++r) m.at(r, t) = col.coord(r);
    }
    return m;
}

Matrix Quaternion::left_mult_matrix(const Quaternion& q) {
    Matrix m(4, 4);
    for (std::size_t t = 0; t < 4; ++t) {
        const Quaternion col = q * basis(t);
        for (std::size_t r = 0; r < 4; ++r) m.at(r, t) = col.coord(r);
    }
    return m;
}

Octonion::Octonion(const Quaternion& a, const Quaternion& b) {
    for (std::size_t t = 0; t < 4; ++t) {
        c_[t] = a.coord(t);
        c_[4 + t] = b.coord(t);
    }
}

Octonion Octonion::basis(std::size_t t) {
    Octonion o;
    o.c_[t] = 1;
    return o;
}

const std::string& Octonion::basis_name(std::size_t t) {
    static const std::array<std::string, 8> names = {"1", "i", "j", "k", "e", "f", "g", "h"};
    return names[t];
}

Octonion Octonion::conj() const {
    Octonion o;
    o.c_[0] = c_[0];
    for (std::size_t t = 1; t < 8; ++t) o.c_[t] = -c_[t];
    return o;
}

Rational Octonion::norm_sq() const {
    Rational s;
    for (const auto& x : c_) s += x * x;
    return s;
}

bool Octonion::is_zero() const {
    for (const auto& x : c_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Octonion Octonion::operator-() const {
    Octonion o;
    for (std::size_t t = 0; t < 8; ++t) o.c_[t] = -c_[t];
    return o;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion o;
    for (std::size_t t = 0; t < 8; ++t) o.c_[t] = a.c_[t] + b.c_[t];
    return o;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion o;
    for (std::size_t t = 0; t < 8; ++t) o.c_[t] = a.c_[t] - b.c_[t];
    return o;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
    const Quaternion p = a.first();
    const Quaternion q = a.second();
    const Quaternion r = b.first();
    const Quaternion s = b.second();
    return {p * r - s.conj() * q, s * p + q * r.conj()};
}

Octonion operator*(const Rational& s, const Octonion& a) {
    Octonion o;
    for (std::size_t t = 0; t < 8; ++t) o.c_[t] = s * a.c_[t];
    return o;
}

std::string Octonion::str() const {
    std::string s = "(";
    for (std::size_t t = 0; t < 8; ++t) {
        if (t) s += ", ";
        s += c_[t].str();
    }
    s += ")";
    return s;
}

Rational inner(const Octonion& a, const Octonion& b) {
    Rational s;
    for (std::size_t t = 0; t < 8; ++t) s += a.coord(t) * b.coord(t);
    return s;
}

Matrix right_mult_matrix(const Octonion& u) {
    Matrix m(8, 8);
    for (std::size_t t = 0; t < 8; ++t) {
        const Octonion col = Octonion::basis(t) * u;
        for (std::size_t r = 0; r < 8; ++r) m.at(r, t) = col.coord(r);
    }
    return m;
}

Matrix left_mult_matrix(const Octonion& u) {
    Matrix m(8, 8);
    for (std::size_t t = 0; t < 8; ++t) {
        const Octonion col = u * Octonion::basis(t);
        for (std::size_t r = 0; r < 8; ++r) m.at(r, t) = col.coord(r);
    }
    return m;
}

bool orthogonal_identity_check(const Octonion& z, const Octonion& u, const Octonion& v) {
    if (!inner(u, v).is_zero()) {
        throw PreconditionError("orthogonal_identity_check: <u, v> must vanish");
    }
    return (z * v.conj()) * u == -((z * u.conj()) * v);
}

}  // namespace cliffgrass
