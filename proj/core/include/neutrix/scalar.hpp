#pragma once

#include "neutrix/rational.hpp"

#include <optional>
#include <string>

namespace neutrix {

/// Scalar of the form a + b*I with I*I = I. Pure reals are the b = 0 case,
/// so every model entry in the library is one of these. Canonical: a zero
/// coefficient is stored as exactly Rational(0), nothing else.
struct NeutroScalar {
    Rational real;  // a
    Rational indet; // b, coefficient of I

    NeutroScalar() = default;
    NeutroScalar(Rational r) : real(std::move(r)) {}
    NeutroScalar(std::int64_t r) : real(r) {}
    NeutroScalar(Rational r, Rational i) : real(std::move(r)), indet(std::move(i)) {}

    static NeutroScalar indeterminate() { return NeutroScalar(Rational(0), Rational(1)); }
    static NeutroScalar pure_indet(Rational b) { return NeutroScalar(Rational(0), std::move(b)); }

    bool is_pure_real() const { return indet.is_zero(); }
    bool is_pure_indet() const { return real.is_zero() && !indet.is_zero(); }
    bool is_zero() const { return real.is_zero() && indet.is_zero(); }

    friend bool operator==(const NeutroScalar&, const NeutroScalar&) = default;
};

NeutroScalar add(const NeutroScalar& x, const NeutroScalar& y);
NeutroScalar sub(const NeutroScalar& x, const NeutroScalar& y);

/// (a1 + b1 I)(a2 + b2 I) = a1 a2 + (a1 b2 + a2 b1 + b1 b2) I.
NeutroScalar mul(const NeutroScalar& x, const NeutroScalar& y);

NeutroScalar negate(const NeutroScalar& x);
NeutroScalar scale(const NeutroScalar& x, const Rational& c);

inline NeutroScalar operator+(const NeutroScalar& x, const NeutroScalar& y) { return add(x, y); }
inline NeutroScalar operator-(const NeutroScalar& x, const NeutroScalar& y) { return sub(x, y); }
inline NeutroScalar operator*(const NeutroScalar& x, const NeutroScalar& y) { return mul(x, y); }
inline NeutroScalar operator-(const NeutroScalar& x) { return negate(x); }

/// Componentwise partial order: Less/Greater/Equal when both parts agree in
/// direction, Incomparable when the real and I parts order oppositely.
enum class Comparison { Less, Equal, Greater, Incomparable };

Comparison compare(const NeutroScalar& x, const NeutroScalar& y);

inline bool leq(const NeutroScalar& x, const NeutroScalar& y) {
    Comparison c = compare(x, y);
    return c == Comparison::Less || c == Comparison::Equal;
}

/// How extrema over scalars are selected.
///  - Usual: componentwise; min/max exist only for comparable pairs.
///  - PseudoReal: total selection by real part (I part breaks ties).
///  - PseudoNeutrosophic: total selection by I coefficient (real part breaks
///    ties); a pure real against a pure I-multiple ranks the I-multiple as
///    the minimum, matching the worked convention for pairs like {7I, 25}.
enum class OrderMode { Usual, PseudoReal, PseudoNeutrosophic };

struct IncomparableError : std::runtime_error {
    IncomparableError() : std::runtime_error("values incomparable under the usual order; pick a pseudo mode") {}
};

struct Extremum {
    NeutroScalar min;
    NeutroScalar max;
};

/// Both pseudo modes return the inputs themselves, never a new value.
Extremum extremum(OrderMode mode, const NeutroScalar& x, const NeutroScalar& y);

/// Trinary state alphabet shared by NCM and BAM-style engines.
/// Serializes as the tokens 0, 1, I.
enum class SignalValue { Off, On, Indeterminate };

/// Discrete BAM signal at threshold zero.
///   pure real x:            On iff x > 0
///   pure I-multiple bI:     Indeterminate iff b > 0, else Off
///   mixed a + bI:           On iff a > 0; Indeterminate iff a <= 0 < b; else Off
/// Zero activation maps to Off. Retention of the previous state at exact
/// threshold equality is an engine option, not part of this function.
SignalValue bam_signal(const NeutroScalar& x);

/// NCM threshold: real part above k wins outright; otherwise any I content
/// makes the state Indeterminate; otherwise Off. Requires k >= 0.
SignalValue ncm_threshold(const NeutroScalar& x, const Rational& k);

char signal_token(SignalValue s);
NeutroScalar signal_scalar(SignalValue s);

/// Token grammar: `a`, `bI`, `a+bI`, `a-bI`, `I`, `-I`, where a, b are
/// decimal literals (fraction literals p/q are accepted too). Canonical
/// printing round-trips bit-exactly.
NeutroScalar parse_scalar(const std::string& token);
std::string print_scalar(const NeutroScalar& x);

/// Display form, both parts rounded half-up to `digits` decimals.
std::string display_scalar(const NeutroScalar& x, int digits = 2);

} // namespace neutrix
