#pragma once

// Test-only oracle: compute the Yang-Baxter residual the long way, in
// U(L) (x) U(L) (x) U(L). Elements are kept as formal triples of words
// (length <= 2); commutators are taken slot-wise by concatenation, and
// the result is rewritten into the PBW basis via x y = y x + [x, y].
// For genuine r-matrices every quadratic word cancels and the residual
// drops into L (x) L (x) L, which is exactly what the production code
// assumes; this oracle checks that collapse independently.

#include "virbialg/algebra.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace virbialg::testing {

using UWord = std::vector<BasisSym>;
using UKey = std::array<UWord, 3>;
using UCombo = std::map<UKey, Scalar>;

inline void u_add(UCombo& m, const UKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

inline UCombo u_mul(const UCombo& a, const UCombo& b) {
    UCombo out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            UKey k;
            for (int s = 0; s < 3; ++s) {
                k[s] = ka[s];
                k[s].insert(k[s].end(), kb[s].begin(), kb[s].end());
            }
            u_add(out, k, ca * cb);
        }
    return out;
}

inline UCombo u_comm(const UCombo& a, const UCombo& b) {
    UCombo out = u_mul(a, b);
    for (const auto& [k, c] : u_mul(b, a)) u_add(out, k, -c);
    return out;
}

inline UCombo u_reduce(UCombo in) {
    for (bool changed = true; changed;) {
        changed = false;
        UCombo next;
        for (const auto& [k, c] : in) {
            int slot = -1;
            for (int s = 0; s < 3; ++s)
                if (k[s].size() == 2 && k[s][1] < k[s][0]) slot = s;
            if (slot < 0) {
                u_add(next, k, c);
                continue;
            }
            changed = true;
            UKey sorted = k;
            std::swap(sorted[slot][0], sorted[slot][1]);
            u_add(next, sorted, c);
            for (const auto& [sym, cb] : bracket(k[slot][0], k[slot][1])) {
                UKey collapsed = k;
                collapsed[slot] = UWord{sym};
                u_add(next, collapsed, c * cb);
            }
        }
        in = std::move(next);
    }
    return in;
}

inline Tensor3 cybe_residual_u3(const Tensor2& r) {
    auto embed = [&](int slot_a, int slot_b) {
        UCombo m;
        for (const auto& [k, c] : r) {
            UKey key;
            key[slot_a] = UWord{k[0]};
            key[slot_b] = UWord{k[1]};
            u_add(m, key, c);
        }
        return m;
    };
    UCombo r12 = embed(0, 1), r13 = embed(0, 2), r23 = embed(1, 2);
    UCombo total = u_comm(r12, r13);
    for (const auto& [k, c] : u_comm(r12, r23)) u_add(total, k, c);
    for (const auto& [k, c] : u_comm(r13, r23)) u_add(total, k, c);
    total = u_reduce(std::move(total));

    Tensor3 out;
    for (const auto& [k, c] : total) {
        if (k[0].size() != 1 || k[1].size() != 1 || k[2].size() != 1)
            throw std::logic_error("U(L)^{x3} residual failed to collapse into L^{x3}");
        out.add_term(Key3{k[0][0], k[1][0], k[2][0]}, c);
    }
    return out;
}

}  // namespace virbialg::testing
