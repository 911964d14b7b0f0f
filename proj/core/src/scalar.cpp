#include "neutrix/scalar.hpp"

namespace neutrix {

NeutroScalar add(const NeutroScalar& x, const NeutroScalar& y) {
    return {x.real + y.real, x.indet + y.indet};
}

NeutroScalar sub(const NeutroScalar& x, const NeutroScalar& y) {
    return {x.real - y.real, x.indet - y.indet};
}

NeutroScalar mul(const NeutroScalar& x, const NeutroScalar& y) {
    return {x.real * y.real,
            x.real * y.indet + y.real * x.indet + x.indet * y.indet};
}

NeutroScalar negate(const NeutroScalar& x) { return {-x.real, -x.indet}; }

NeutroScalar scale(const NeutroScalar& x, const Rational& c) {
    return {x.real * c, x.indet * c};
}

Comparison compare(const NeutroScalar& x, const NeutroScalar& y) {
    auto r = x.real <=> y.real;
    auto i = x.indet <=> y.indet;
    if (r == std::strong_ordering::equal && i == std::strong_ordering::equal)
        return Comparison::Equal;
    bool le = r != std::strong_ordering::greater && i != std::strong_ordering::greater;
    bool ge = r != std::strong_ordering::less && i != std::strong_ordering::less;
    if (le) return Comparison::Less;
    if (ge) return Comparison::Greater;
    return Comparison::Incomparable;
}

namespace {

// Total selection order for the pseudo modes. Returns true when x ranks
// at or below y.
bool pseudo_leq(OrderMode mode, const NeutroScalar& x, const NeutroScalar& y) {
    if (mode == OrderMode::PseudoReal) {
        if (x.real != y.real) return x.real < y.real;
        return x.indet <= y.indet;
    }
    // PseudoNeutrosophic. A pure I-multiple against a pure real is ranked
    // below it (the indeterminate counts for less than the determinate);
    // otherwise the I coefficient decides and the real part breaks ties.
    bool xi = x.is_pure_indet();
    bool yi = y.is_pure_indet();
    if (xi != yi && x.indet != y.indet) return xi;
    if (x.indet != y.indet) return x.indet < y.indet;
    return x.real <= y.real;
}

} // namespace

Extremum extremum(OrderMode mode, const NeutroScalar& x, const NeutroScalar& y) {
    if (mode == OrderMode::Usual) {
        switch (compare(x, y)) {
            case Comparison::Less: return {x, y};
            case Comparison::Equal: return {x, y};
            case Comparison::Greater: return {y, x};
            case Comparison::Incomparable: throw IncomparableError{};
        }
    }
    return pseudo_leq(mode, x, y) ? Extremum{x, y} : Extremum{y, x};
}

SignalValue bam_signal(const NeutroScalar& x) {
    if (x.real.sign() > 0) return SignalValue::On;
    if (x.indet.sign() > 0) return SignalValue::Indeterminate;
    return SignalValue::Off;
}

SignalValue ncm_threshold(const NeutroScalar& x, const Rational& k) {
    if (k.sign() < 0) throw std::invalid_argument("ncm threshold must be nonnegative");
    if (x.real > k) return SignalValue::On;
    if (!x.indet.is_zero()) return SignalValue::Indeterminate;
    return SignalValue::Off;
}

char signal_token(SignalValue s) {
    switch (s) {
        case SignalValue::Off: return '0';
        case SignalValue::On: return '1';
        case SignalValue::Indeterminate: return 'I';
    }
    return '?';
}

NeutroScalar signal_scalar(SignalValue s) {
    switch (s) {
        case SignalValue::Off: return NeutroScalar(0);
        case SignalValue::On: return NeutroScalar(1);
        case SignalValue::Indeterminate: return NeutroScalar::indeterminate();
    }
    return NeutroScalar(0);
}

namespace {

struct SyntaxError : std::invalid_argument {
    explicit SyntaxError(const std::string& token)
        : std::invalid_argument("malformed scalar token: '" + token + "'") {}
};

// One signed term: either `<lit>` or `<lit>I` or bare `I`.
// Returns (value, is_indet_term).
std::pair<Rational, bool> parse_term(const std::string& term, const std::string& whole) {
    if (term.empty()) throw SyntaxError(whole);
    bool neg = false;
    std::size_t pos = 0;
    if (term[pos] == '+' || term[pos] == '-') {
        neg = term[pos] == '-';
        ++pos;
    }
    std::string body = term.substr(pos);
    if (body.empty()) throw SyntaxError(whole);
    bool indet = body.back() == 'I';
    if (indet) body.pop_back();
    Rational mag(1);
    if (!body.empty()) {
        try {
            mag = Rational::from_decimal(body);
        } catch (const std::invalid_argument&) {
            throw SyntaxError(whole);
        }
    } else if (!indet) {
        throw SyntaxError(whole);
    }
    return {neg ? -mag : mag, indet};
}

} // namespace

NeutroScalar parse_scalar(const std::string& token) {
    std::string t;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw SyntaxError(token);

    // Split on the first +/- that is not the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] == '+' || t[i] == '-') {
            split = i;
            break;
        }
    }

    NeutroScalar out;
    if (split == std::string::npos) {
        auto [value, is_indet] = parse_term(t, token);
        (is_indet ? out.indet : out.real) = value;
        return out;
    }
    auto [first, first_indet] = parse_term(t.substr(0, split), token);
    auto [second, second_indet] = parse_term(t.substr(split), token);
    if (first_indet == second_indet) throw SyntaxError(token);
    (first_indet ? out.indet : out.real) = first;
    (second_indet ? out.indet : out.real) = second;
    return out;
}

std::string print_scalar(const NeutroScalar& x) {
    if (x.indet.is_zero()) return x.real.to_string();
    std::string ipart;
    if (x.indet == Rational(1)) ipart = "I";
    else if (x.indet == Rational(-1)) ipart = "-I";
    else ipart = x.indet.to_string() + "I";
    if (x.real.is_zero()) return ipart;
    if (x.indet.sign() > 0) return x.real.to_string() + "+" + ipart;
    return x.real.to_string() + ipart; // ipart carries its minus sign
}

std::string display_scalar(const NeutroScalar& x, int digits) {
    if (x.indet.is_zero()) return x.real.to_display(digits);
    std::string ipart = x.indet.abs().to_display(digits) + "I";
    if (x.real.is_zero() && x.indet.sign() < 0) return "-" + ipart;
    if (x.real.is_zero()) return ipart;
    return x.real.to_display(digits) + (x.indet.sign() < 0 ? "-" : "+") + ipart;
}

} // namespace neutrix
