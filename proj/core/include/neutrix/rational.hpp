#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace neutrix {

/// Raised when a rational intermediate no longer fits in 64 bits after
/// reduction. Model fixtures are small two-decimal grids, so hitting this
/// indicates misuse rather than a precision limit to engineer around.
struct RationalOverflow : std::overflow_error {
    RationalOverflow() : std::overflow_error("rational overflow") {}
};

/// Exact rational on int64 numerator / positive int64 denominator, always
/// reduced. All matrix entries and state coordinates are stored this way so
/// golden values compare exactly, with doubles only at the display layer.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    static Rational from_decimal(const std::string& text);
    static Rational from_double(double value, std::int64_t max_den = 1'000'000'000);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Exact decimal when the denominator is 2^a*5^b, else "num/den".
    std::string to_string() const;
    /// Fixed-point string rounded half-up to `digits` decimals (display only).
    std::string to_display(int digits = 2) const;

    static Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
    static Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.abs(); }

} // namespace neutrix
