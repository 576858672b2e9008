#pragma once

// Exact Gaussian-rational arithmetic: the coefficient field Q(i).

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace virbialg {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in Q(i)") {}
};

/// A Gaussian rational a + b*i with exact, normalized rational parts.
/// Totally ordered lexicographically on (re, im); the order is
/// translation-invariant, which is what the reduction machinery needs.
struct Scalar {
    Rat re{0};
    Rat im{0};

    Scalar() = default;
    Scalar(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rat r) : re(std::move(r)) {}
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar rational(long num, long den) { return Scalar(Rat(num, den)); }
    static Scalar imag_unit() { return Scalar(Rat(0), Rat(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re == 1 && im.is_zero(); }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    /// Multiplicative inverse; throws DivisionByZero on 0.
    Scalar inv() const {
        Rat n = re * re + im * im;  // vanishes over Q only at 0
        if (n.is_zero()) throw DivisionByZero();
        return Scalar(re / n, -im / n);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Lexicographic comparison on (re, im).
    std::strong_ordering operator<=>(const Scalar& o) const {
        if (re < o.re) return std::strong_ordering::less;
        if (o.re < re) return std::strong_ordering::greater;
        if (im < o.im) return std::strong_ordering::less;
        if (o.im < im) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_negative() const { return *this < Scalar(0); }
};

inline int cmp(const Scalar& a, const Scalar& b) {
    auto ord = a <=> b;
    return ord < 0 ? -1 : (ord > 0 ? 1 : 0);
}

inline std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Canonical literal: "0", "3/4", "-2", "i", "-i", "2i", "1/2+i", "1/2-1/3i".
inline std::string to_string(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    if (!s.re.is_zero()) out += to_string(s.re);
    if (!s.im.is_zero()) {
        Rat mag = s.im < 0 ? Rat(-s.im) : s.im;
        if (!s.re.is_zero()) out += s.im < 0 ? "-" : "+";
        else if (s.im < 0) out += "-";
        if (mag != 1) out += to_string(mag);
        out += "i";
    }
    return out;
}

/// Printed form of a coefficient in front of '*': compound values are
/// parenthesized so sums of coefficients cannot be confused with sums
/// of terms.
inline std::string coeff_string(const Scalar& s) {
    if (!s.re.is_zero() && !s.im.is_zero()) return "(" + to_string(s) + ")";
    return to_string(s);
}

}  // namespace virbialg
