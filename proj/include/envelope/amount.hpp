#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "envelope/errors.hpp"
#include "envelope/rational.hpp"

namespace envelope {

// Exact nonnegative money value. Signed intermediate results (corrections,
// gains) live in Rational; Amount is the currency-facing boundary.
class Amount {
public:
    Amount() = default; // zero

    explicit Amount(Rational value) : value_(std::move(value)) {
        if (value_.is_negative())
            throw ValidationError("amount must be nonnegative");
    }

    Amount(long long n) : Amount(Rational(n)) {}

    static Amount parse(std::string_view text) { return Amount(Rational::parse(text)); }
    static Amount from_double(double v) { return Amount(Rational::from_double(v)); }

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    bool is_positive() const { return value_.is_positive(); }

    Amount doubled() const { return Amount(value_ * Rational(2)); }
    Amount halved() const { return Amount(value_ / Rational(2)); }

    friend Amount operator+(const Amount& a, const Amount& b) {
        return Amount(a.value_ + b.value_);
    }
    // Scaling by an arbitrary rational may leave the money domain; callers
    // get a signed Rational back and re-wrap where nonnegativity is known.
    friend Rational operator*(const Amount& a, const Rational& k) { return a.value_ * k; }
    friend Rational operator*(const Rational& k, const Amount& a) { return a.value_ * k; }

    friend bool operator==(const Amount&, const Amount&) = default;
    friend std::strong_ordering operator<=>(const Amount& a, const Amount& b) {
        return a.value_ <=> b.value_;
    }

    double to_double() const { return value_.to_double(); }
    std::string str() const { return value_.str(); }
    std::string decimal_str(int digits = 6) const { return value_.decimal_str(digits); }

    friend std::ostream& operator<<(std::ostream& os, const Amount& a) {
        return os << a.str();
    }

private:
    Rational value_;
};

} // namespace envelope
