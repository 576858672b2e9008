#pragma once

// Basis symbols of the generalized Virasoro-like algebra:
// L_a for nonzero degrees a, and the two Cartan generators d1, d2.

#include "virbialg/degree.hpp"

#include <cassert>
#include <compare>
#include <string>

namespace virbialg {

struct BasisSym {
    enum class Kind { D1, D2, L };

    Kind kind{Kind::D1};
    Degree deg;  // meaningful for Kind::L only; (0,0) otherwise

    static BasisSym d1() { return {Kind::D1, Degree{}}; }
    static BasisSym d2() { return {Kind::D2, Degree{}}; }
    /// L_a; the degree must be nonzero (L_0 is the zero element, which
    /// lives at the LieElt level, never as a symbol).
    static BasisSym L(Degree a) {
        assert(!a.is_zero());
        return {Kind::L, std::move(a)};
    }
    static BasisSym L(long p, long q) { return L(Degree(p, q)); }

    bool is_L() const { return kind == Kind::L; }

    /// Grading: deg(L_a) = a, deg(d1) = deg(d2) = 0.
    Degree degree() const { return kind == Kind::L ? deg : Degree{}; }

    bool operator==(const BasisSym& o) const {
        if (kind != o.kind) return false;
        return kind != Kind::L || deg == o.deg;
    }
    bool operator!=(const BasisSym& o) const { return !(*this == o); }

    // Canonical term order: d1 < d2 < L (L ordered by degree).
    std::strong_ordering operator<=>(const BasisSym& o) const {
        if (kind != o.kind) return static_cast<int>(kind) <=> static_cast<int>(o.kind);
        if (kind != Kind::L) return std::strong_ordering::equal;
        return deg <=> o.deg;
    }
};

inline std::string to_string(const BasisSym& s) {
    switch (s.kind) {
        case BasisSym::Kind::D1: return "d1";
        case BasisSym::Kind::D2: return "d2";
        default: return "L" + to_string(s.deg);
    }
}

}  // namespace virbialg
