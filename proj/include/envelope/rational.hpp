#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "envelope/errors.hpp"

namespace envelope {

using BigInt = boost::multiprecision::cpp_int;

// Exact signed rational. Always held in lowest terms with a positive
// denominator; zero is 0/1. Arithmetic never rounds.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw ValidationError("rational denominator must be nonzero");
        normalize();
    }

    // Exact conversion: every finite double is a dyadic rational.
    static Rational from_double(double v) {
        if (!std::isfinite(v))
            throw ValidationError("cannot convert non-finite value to rational");
        if (v == 0.0)
            return Rational();
        int exp = 0;
        double mant = std::frexp(v, &exp); // v = mant * 2^exp, |mant| in [0.5, 1)
        auto scaled = static_cast<long long>(std::ldexp(mant, 53)); // integral
        BigInt num(scaled);
        exp -= 53;
        if (exp >= 0)
            return Rational(num << exp, 1);
        return Rational(num, BigInt(1) << -exp);
    }

    // Accepts "num/den", a plain integer "n", or a decimal like "1.25"
    // (parsed exactly, not through floating point).
    static Rational parse(std::string_view text);

    // Nearest rational with denominator 10^digits, ties away from zero.
    static Rational from_double_rounded(double v, int digits);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw ValidationError("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Lowest-terms storage makes equality plain field equality.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    double to_double() const {
        return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
    }

    // "num/den", or just "num" for integers.
    std::string str() const;

    // Fixed-point decimal rendering, rounded to `digits` places (approximate
    // unless the value is exactly representable).
    std::string decimal_str(int digits = 6) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

} // namespace envelope
