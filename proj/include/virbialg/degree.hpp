#pragma once

// Degrees (elements of the grading group inside C^2) and the Cartan
// pairing <a1*d1 + a2*d2, (x1,x2)> = a1*x1 + a2*x2.

#include "virbialg/scalar.hpp"

#include <compare>
#include <string>

namespace virbialg {

struct Degree {
    Scalar c1;
    Scalar c2;

    Degree() = default;
    Degree(Scalar a, Scalar b) : c1(std::move(a)), c2(std::move(b)) {}
    Degree(long a, long b) : c1(a), c2(b) {}

    bool is_zero() const { return c1.is_zero() && c2.is_zero(); }

    Degree operator-() const { return {-c1, -c2}; }
    friend Degree operator+(const Degree& a, const Degree& b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
    friend Degree operator-(const Degree& a, const Degree& b) { return {a.c1 - b.c1, a.c2 - b.c2}; }

    bool operator==(const Degree& o) const { return c1 == o.c1 && c2 == o.c2; }
    bool operator!=(const Degree& o) const { return !(*this == o); }

    std::strong_ordering operator<=>(const Degree& o) const {
        auto c = c1 <=> o.c1;
        if (c != 0) return c;
        return c2 <=> o.c2;
    }

    /// Positive in the group-compatible total order: c1 > 0, or c1 = 0 and c2 > 0.
    bool lex_positive() const {
        Scalar zero(0);
        if (zero < c1) return true;
        if (c1 < zero) return false;
        return zero < c2;
    }
};

inline std::string to_string(const Degree& d) {
    return "(" + to_string(d.c1) + ";" + to_string(d.c2) + ")";
}

/// An element a1*d1 + a2*d2 of the Cartan subalgebra T.
struct CartanElt {
    Scalar a1;
    Scalar a2;

    CartanElt() = default;
    CartanElt(Scalar x, Scalar y) : a1(std::move(x)), a2(std::move(y)) {}
    CartanElt(long x, long y) : a1(x), a2(y) {}

    bool is_zero() const { return a1.is_zero() && a2.is_zero(); }
};

/// <d, a> = a1*x1 + a2*x2; bilinear over Q(i).
inline Scalar pairing(const CartanElt& d, const Degree& a) {
    return d.a1 * a.c1 + d.a2 * a.c2;
}

}  // namespace virbialg
