#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "cliffgrass/error.hpp"

namespace cliffgrass {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always held in canonical form: gcd(|num|, den) = 1
/// and den > 0. Every operation is exact; there is no floating point anywhere
/// in the library.
class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw ValidationError("Rational: zero denominator");
        v_ = num;
        v_ /= boost::multiprecision::cpp_rational(den);
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p" or "p/q" with optional leading minus sign.
    static Rational parse(std::string_view s);

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ValidationError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational reciprocal() const {
        if (is_zero()) throw ValidationError("Rational: reciprocal of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p" when the denominator is 1, otherwise "p/q". Round-trips through parse().
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) {
            s += '/';
            s += denominator().str();
        }
        return s;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw ValidationError("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    std::size_t pos = 0;
    auto read_integer = [&]() -> Integer {
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        std::size_t digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            ++pos;
            ++digits;
        }
        if (digits == 0) bad();
        return Integer(std::string(s.substr(start, pos - start)));
    };
    Integer num = read_integer();
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') bad();
    ++pos;
    Integer den = read_integer();
    if (pos != s.size()) bad();
    if (den <= 0) bad();  // serialized denominators are positive
    return Rational(num, den);
}

}  // namespace cliffgrass
