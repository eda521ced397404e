#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

// Exact rational arithmetic for the enumeration oracle and the spectral
// checks. Every operation reduces by gcd and checks for overflow, so a
// computation that would silently wrap instead throws std::overflow_error;
// the oracle's n <= 12 bound keeps well clear of that in practice.

namespace polya {

namespace detail {

template <typename I>
I rat_abs(I v) { return v < 0 ? -v : v; }

template <typename I>
I rat_gcd(I a, I b) {
    a = rat_abs(a);
    b = rat_abs(b);
    while (b != 0) {
        I t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

inline std::string int_to_string(long long v) { return std::to_string(v); }
inline std::string int_to_string(__int128 v) { return int128_to_string(v); }

} // namespace detail

template <typename I = __int128>
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(I value) : num_(value), den_(1) {} // NOLINT: implicit from integers is the point
    Rational(I num, I den) : num_(num), den_(den) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    I num() const { return num_; }
    I den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_, unchecked_tag{}); }

    Rational operator+(const Rational& o) const {
        // Reduce cross terms first: a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g))
        I g = detail::rat_gcd(den_, o.den_);
        I lhs = checked_mul(num_, o.den_ / g);
        I rhs = checked_mul(o.num_, den_ / g);
        return Rational(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        I g1 = detail::rat_gcd(num_, o.den_);
        I g2 = detail::rat_gcd(o.num_, den_);
        return Rational(checked_mul(num_ / g1, o.num_ / g2),
                        checked_mul(den_ / g2, o.den_ / g1), unchecked_tag{});
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return *this * Rational(o.den_, o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        // Safe comparison via the same cross-multiplication used by operator+.
        I g = detail::rat_gcd(den_, o.den_);
        return checked_mul(num_, o.den_ / g) < checked_mul(o.num_, den_ / g);
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    std::string to_string() const {
        if (den_ == 1) return detail::int_to_string(num_);
        return detail::int_to_string(num_) + "/" + detail::int_to_string(den_);
    }

private:
    struct unchecked_tag {};
    Rational(I num, I den, unchecked_tag) : num_(num), den_(den) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        I g = detail::rat_gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static I checked_add(I a, I b) {
        I r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow (+)");
        return r;
    }
    static I checked_mul(I a, I b) {
        I r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow (*)");
        return r;
    }

    I num_;
    I den_;
};

template <typename I>
std::ostream& operator<<(std::ostream& os, const Rational<I>& r) {
    return os << r.to_string();
}

using Rat = Rational<__int128>;

// Fixed-size dense aliases used across the library; Scalar is double on hot
// paths and Rational in the exact oracle.
template <typename Scalar> using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar> using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

} // namespace polya

namespace Eigen {

// Minimal trait set so Eigen's fixed-size products work with exact rationals.
template <typename I>
struct NumTraits<polya::Rational<I>> {
    using Self = polya::Rational<I>;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 10,
        MulCost = 10,
    };
    static Self epsilon() { return Self(0); }
    static Self dummy_precision() { return Self(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen
