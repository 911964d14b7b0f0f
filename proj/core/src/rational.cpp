#include "neutrix/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace neutrix {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw RationalOverflow{};
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den)); // already reduced; ctor re-checks cheaply
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = narrow(-static_cast<i128>(num_));
        den_ = narrow(-static_cast<i128>(den_));
    }
    i128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ = static_cast<std::int64_t>(num_ / g);
        den_ = static_cast<std::int64_t>(den_ / g);
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<i128>(num_));
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty numeric literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    // Fraction form p/q is accepted wherever a decimal literal is.
    std::size_t slash = text.find('/', pos);
    if (slash != std::string::npos) {
        Rational p = from_decimal(text.substr(pos, slash - pos));
        Rational q = from_decimal(text.substr(slash + 1));
        Rational r = p / q;
        return negative ? -r : r;
    }

    i128 intpart = 0;
    bool any_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        intpart = intpart * 10 + (text[pos] - '0');
        if (intpart > INT64_MAX) throw RationalOverflow{};
        any_digit = true;
        ++pos;
    }
    i128 num = intpart;
    i128 den = 1;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            num = num * 10 + (text[pos] - '0');
            den *= 10;
            if (num > INT64_MAX || den > INT64_MAX) throw RationalOverflow{};
            any_digit = true;
            ++pos;
        }
    }
    if (!any_digit || pos != text.size())
        throw std::invalid_argument("malformed numeric literal: '" + text + "'");
    Rational r = make(num, den);
    return negative ? -r : r;
}

Rational Rational::from_double(double value, std::int64_t max_den) {
    // Continued-fraction approximation; exact for the short decimals we meet.
    bool negative = value < 0;
    double x = negative ? -value : value;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int it = 0; it < 64; ++it) {
        std::int64_t a = static_cast<std::int64_t>(frac);
        std::int64_t p2 = a * p1 + p0;
        std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - static_cast<double>(a);
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    Rational r(p1, q1 == 0 ? 1 : q1);
    return negative ? -r : r;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

    int digits = twos > fives ? twos : fives;
    i128 scaled = static_cast<i128>(num_ < 0 ? -num_ : num_);
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= den_;
    std::string body;
    for (i128 v = scaled; v > 0; v /= 10) body.insert(body.begin(), static_cast<char>('0' + (int)(v % 10)));
    while ((int)body.size() <= digits) body.insert(body.begin(), '0');
    body.insert(body.size() - digits, ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
    return (num_ < 0 ? "-" : "") + body;
}

std::string Rational::to_display(int digits) const {
    i128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    i128 doubled = static_cast<i128>(num_ < 0 ? -num_ : num_) * scale * 2 + den_;
    i128 rounded = doubled / (static_cast<i128>(den_) * 2); // half-up
    std::string body;
    for (i128 v = rounded; v > 0; v /= 10) body.insert(body.begin(), static_cast<char>('0' + (int)(v % 10)));
    while ((int)body.size() <= digits) body.insert(body.begin(), '0');
    if (digits > 0) body.insert(body.size() - digits, ".");
    return (num_ < 0 && rounded != 0 ? "-" : "") + body;
}

} // namespace neutrix
