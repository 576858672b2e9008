#pragma once

// Tensor square/cube machinery: twist and cyclic maps, the adjoint
// diagonal action x.(a(x)b) = [x,a](x)b + a(x)[x,b] (and its 3-slot
// analog), and the antisymmetry test for Im(1 - twist).

#include "virbialg/algebra.hpp"

namespace virbialg {

inline Tensor2 twist(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t) out.add_term(Key2{k[1], k[0]}, c);
    return out;
}

inline Tensor3 cyclic(const Tensor3& t) {
    Tensor3 out;
    for (const auto& [k, c] : t) out.add_term(Key3{k[1], k[2], k[0]}, c);
    return out;
}

/// t + cyclic(t) + cyclic^2(t).
inline Tensor3 cyclic_symmetrize(const Tensor3& t) {
    Tensor3 c1 = cyclic(t);
    return t + c1 + cyclic(c1);
}

namespace detail {

// Substitute a one-term element into slot `slot` of a key, scaling by
// its coefficient; used to expand the Leibniz action slot by slot.
template <typename Key, std::size_t N>
void act_slots(const BasisSym& x, const Scalar& cx, const Key& k, const Scalar& ck,
               SparseCombo<Key>& out) {
    for (std::size_t slot = 0; slot < N; ++slot) {
        LieElt br = bracket(x, k[slot]);
        for (const auto& [sym, c] : br) {
            Key nk = k;
            nk[slot] = sym;
            out.add_term(nk, cx * ck * c);
        }
    }
}

}  // namespace detail

/// Adjoint diagonal action on the tensor square.
inline Tensor2 act2(const LieElt& x, const Tensor2& t) {
    Tensor2 out;
    for (const auto& [xs, cx] : x)
        for (const auto& [k, ck] : t) detail::act_slots<Key2, 2>(xs, cx, k, ck, out);
    return out;
}

/// Adjoint diagonal action on the tensor cube.
inline Tensor3 act3(const LieElt& x, const Tensor3& t) {
    Tensor3 out;
    for (const auto& [xs, cx] : x)
        for (const auto& [k, ck] : t) detail::act_slots<Key3, 3>(xs, cx, k, ck, out);
    return out;
}

/// t + twist(t); zero iff t lies in Im(1 - twist) (characteristic 0).
inline Tensor2 antisym_defect(const Tensor2& t) { return t + twist(t); }

inline bool is_antisymmetric(const Tensor2& t) { return antisym_defect(t).is_zero(); }

}  // namespace virbialg
