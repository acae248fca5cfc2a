#include "envelope/rational.hpp"

#include <cctype>
#include <cmath>

namespace envelope {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty())
        throw ValidationError("empty integer in rational");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw ValidationError("malformed integer in rational: '" + std::string(text) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ValidationError("malformed integer in rational: '" + std::string(text) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? -value : value;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (text.find('/', slash + 1) != std::string_view::npos)
            throw ValidationError("malformed rational: '" + std::string(text) + "'");
        return Rational(parse_integer(text.substr(0, slash)),
                        parse_integer(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (frac.empty())
            throw ValidationError("malformed decimal: '" + std::string(text) + "'");
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ValidationError("malformed decimal: '" + std::string(text) + "'");
        bool negative = !whole.empty() && whole[0] == '-';
        BigInt whole_part = whole.empty() || whole == "-" || whole == "+"
                                ? BigInt(0)
                                : parse_integer(whole);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        BigInt frac_part = frac.empty() ? BigInt(0) : parse_integer(frac);
        BigInt num = abs(whole_part) * scale + frac_part;
        if (negative || whole_part < 0)
            num = -num;
        return Rational(num, scale);
    }
    return Rational(parse_integer(text), 1);
}

Rational Rational::from_double_rounded(double v, int digits) {
    if (!std::isfinite(v))
        throw ValidationError("cannot convert non-finite value to rational");
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    // Exact dyadic conversion first, then round the scaled value to the
    // nearest integer (ties away from zero) so the result is independent of
    // any second floating-point rounding.
    Rational exact = from_double(v);
    BigInt scaled_num = exact.num() * scale;
    BigInt q = scaled_num / exact.den();
    BigInt r = scaled_num % exact.den();
    BigInt twice = abs(r) * 2;
    if (twice >= exact.den())
        q += scaled_num < 0 ? -1 : 1;
    return Rational(q, scale);
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::string Rational::decimal_str(int digits) const {
    if (digits < 0)
        digits = 0;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    BigInt scaled = num_ * scale;
    BigInt q = scaled / den_;
    BigInt r = scaled % den_;
    if (abs(r) * 2 >= den_)
        q += scaled < 0 ? -1 : 1;
    bool negative = q < 0;
    BigInt whole = abs(q) / scale;
    BigInt frac = abs(q) % scale;
    std::string frac_str = frac.str();
    if (frac_str.size() < static_cast<std::size_t>(digits))
        frac_str.insert(frac_str.begin(), digits - frac_str.size(), '0');
    std::string out = negative ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        out += '.';
        out += frac_str;
    }
    return out;
}

} // namespace envelope
