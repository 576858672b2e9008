#pragma once

// The bracket of the generalized Virasoro-like algebra and its
// grading utilities:
//   [L_a, L_b] = (a1*b2 - b1*a2) L_{a+b},   [d_i, L_a] = a_i L_a.

#include "virbialg/combo.hpp"

#include <map>

namespace virbialg {

/// Bracket of two basis symbols (at most one term; L_0 collapses to 0).
inline LieElt bracket(const BasisSym& x, const BasisSym& y) {
    using K = BasisSym::Kind;
    if (x.kind != K::L && y.kind != K::L) return {};  // T is abelian
    if (x.kind != K::L) {
        const Scalar& c = x.kind == K::D1 ? y.deg.c1 : y.deg.c2;
        LieElt r;
        r.add_term(y, c);
        return r;
    }
    if (y.kind != K::L) {
        const Scalar& c = y.kind == K::D1 ? x.deg.c1 : x.deg.c2;
        LieElt r;
        r.add_term(x, -c);
        return r;
    }
    Scalar det = x.deg.c1 * y.deg.c2 - y.deg.c1 * x.deg.c2;
    if (det.is_zero()) return {};
    LieElt r = lie_L(x.deg + y.deg);
    r *= det;
    return r;
}

inline LieElt bracket(const LieElt& x, const LieElt& y) {
    LieElt out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            LieElt t = bracket(a, b);
            t *= ca * cb;
            out += t;
        }
    return out;
}

/// Jacobi defect [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; identically zero.
inline LieElt check_jacobi(const LieElt& x, const LieElt& y, const LieElt& z) {
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
}

/// Split into homogeneous components; the values sum back to the input.
template <typename Key>
std::map<Degree, SparseCombo<Key>> degree_decompose(const SparseCombo<Key>& v) {
    std::map<Degree, SparseCombo<Key>> out;
    for (const auto& [k, c] : v) out[key_degree(k)].add_term(k, c);
    return out;
}

/// true iff every term has the given degree.
template <typename Key>
bool is_homogeneous(const SparseCombo<Key>& v, const Degree& d) {
    for (const auto& [k, c] : v)
        if (key_degree(k) != d) return false;
    return true;
}

}  // namespace virbialg
