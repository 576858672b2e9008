#pragma once

// Finite sparse linear combinations over Q(i), shared by Lie elements
// (keys = basis symbols) and tensor squares/cubes (keys = symbol pairs
// and triples). Zero coefficients are never stored, so structural
// equality is semantic equality and map iteration is the canonical
// term order.

#include "virbialg/basis.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace virbialg {

template <typename Key>
class SparseCombo {
public:
    using key_type = Key;
    using map_type = std::map<Key, Scalar>;

    SparseCombo() = default;

    static SparseCombo unit(Key k) {
        SparseCombo c;
        c.terms_.emplace(std::move(k), Scalar(1));
        return c;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    SparseCombo& operator+=(const SparseCombo& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    SparseCombo& operator-=(const SparseCombo& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    SparseCombo& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend SparseCombo operator+(SparseCombo a, const SparseCombo& b) { return a += b; }
    friend SparseCombo operator-(SparseCombo a, const SparseCombo& b) { return a -= b; }
    friend SparseCombo operator*(const Scalar& s, SparseCombo a) { return a *= s; }
    SparseCombo operator-() const {
        SparseCombo r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    bool operator==(const SparseCombo& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparseCombo& o) const { return !(*this == o); }

private:
    map_type terms_;
};

using LieElt = SparseCombo<BasisSym>;
using Key2 = std::array<BasisSym, 2>;
using Key3 = std::array<BasisSym, 3>;
using Tensor2 = SparseCombo<Key2>;
using Tensor3 = SparseCombo<Key3>;

/// L_a as an element; the zero element when a = 0 (undefined symbols
/// read as zero, so L_0 never exists as a basis symbol).
inline LieElt lie_L(const Degree& a) {
    if (a.is_zero()) return {};
    return LieElt::unit(BasisSym::L(a));
}
inline LieElt lie_L(long p, long q) { return lie_L(Degree(p, q)); }
inline LieElt lie_d1() { return LieElt::unit(BasisSym::d1()); }
inline LieElt lie_d2() { return LieElt::unit(BasisSym::d2()); }

inline LieElt to_elt(const CartanElt& d) {
    LieElt e;
    e.add_term(BasisSym::d1(), d.a1);
    e.add_term(BasisSym::d2(), d.a2);
    return e;
}

inline Tensor2 tensor(const BasisSym& a, const BasisSym& b) {
    return Tensor2::unit(Key2{a, b});
}
inline Tensor3 tensor(const BasisSym& a, const BasisSym& b, const BasisSym& c) {
    return Tensor3::unit(Key3{a, b, c});
}

/// Outer product of elements.
inline Tensor2 tensor(const LieElt& x, const LieElt& y) {
    Tensor2 t;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) t.add_term(Key2{a, b}, ca * cb);
    return t;
}

inline Degree key_degree(const BasisSym& k) { return k.degree(); }
inline Degree key_degree(const Key2& k) { return k[0].degree() + k[1].degree(); }
inline Degree key_degree(const Key3& k) {
    return k[0].degree() + k[1].degree() + k[2].degree();
}

namespace detail {
inline std::string key_string(const BasisSym& k) { return to_string(k); }
inline std::string key_string(const Key2& k) {
    return to_string(k[0]) + " (x) " + to_string(k[1]);
}
inline std::string key_string(const Key3& k) {
    return to_string(k[0]) + " (x) " + to_string(k[1]) + " (x) " + to_string(k[2]);
}
}  // namespace detail

/// Canonical rendering: terms in key order, signs folded into the
/// joiners, unit coefficients elided, compound coefficients in parens.
template <typename Key>
std::string to_string(const SparseCombo<Key>& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : v) {
        bool neg = c.is_negative();
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (!mag.is_one()) out += coeff_string(mag) + "*";
        out += detail::key_string(k);
    }
    return out;
}

}  // namespace virbialg
