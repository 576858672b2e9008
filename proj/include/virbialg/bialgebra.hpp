#pragma once

// Coboundary cobrackets, the classical and modern Yang-Baxter
// residuals, the Michaelis construction, and the cocommutator axiom
// checks (anti-commutativity, co-Jacobi, compatibility).

#include "virbialg/lattice.hpp"
#include "virbialg/tensor.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace virbialg {

struct OutOfWindow : std::runtime_error {
    explicit OutOfWindow(const BasisSym& sym)
        : std::runtime_error("value requested outside the tabulated window: " + to_string(sym)),
          symbol(sym) {}
    BasisSym symbol;
};

struct ZeroPairing : std::invalid_argument {
    ZeroPairing() : std::invalid_argument("michaelis_r: pairing(d, alpha) = 0") {}
};
struct ZeroDegree : std::invalid_argument {
    ZeroDegree() : std::invalid_argument("michaelis_r: alpha = 0") {}
};
struct NotAntisymmetric : std::invalid_argument {
    NotAntisymmetric() : std::invalid_argument("r is not antisymmetric") {}
};

/// A linear map L -> L(x)L given by its values on a finite window of
/// basis symbols. Values are never extrapolated beyond the window.
struct DerivationTable {
    std::vector<BasisSym> window;
    std::map<BasisSym, Tensor2> values;

    bool in_window(const BasisSym& s) const { return values.count(s) != 0; }

    void set(const BasisSym& s, Tensor2 v) {
        if (!in_window(s)) window.push_back(s);
        values[s] = std::move(v);
    }

    const Tensor2& value(const BasisSym& s) const {
        auto it = values.find(s);
        if (it == values.end()) throw OutOfWindow(s);
        return it->second;
    }

    /// Linear extension to the window span.
    Tensor2 apply(const LieElt& x) const {
        Tensor2 out;
        for (const auto& [sym, c] : x) {
            Tensor2 v = value(sym);
            v *= c;
            out += v;
        }
        return out;
    }
};

/// A cobracket: either the coboundary of a tensor r (x -> x.r) or a
/// table of values on a window.
struct Cobracket {
    std::variant<Tensor2, DerivationTable> impl;

    static Cobracket from_r(Tensor2 r) { return {std::move(r)}; }
    static Cobracket tabulated(DerivationTable t) { return {std::move(t)}; }

    bool is_tabulated() const { return std::holds_alternative<DerivationTable>(impl); }

    Tensor2 apply(const LieElt& x) const {
        if (auto* r = std::get_if<Tensor2>(&impl)) return act2(x, *r);
        return std::get<DerivationTable>(impl).apply(x);
    }
};

inline Tensor2 cobracket_apply(const Cobracket& d, const LieElt& x) { return d.apply(x); }

/// Tabulate a cobracket's values on a window of symbols.
inline DerivationTable tabulate(const Cobracket& d, const std::vector<BasisSym>& window) {
    DerivationTable t;
    for (const auto& s : window) t.set(s, d.apply(LieElt::unit(s)));
    return t;
}

/// c(r) = [r12,r13] + [r12,r23] + [r13,r23], computed inside L(x)L(x)L:
/// for r = sum_i a_i (x) b_i the commutators collapse slot-wise to
///   sum_{i,j} [a_i,a_j](x)b_i(x)b_j + a_i(x)[b_i,a_j](x)b_j
///           + a_i(x)a_j(x)[b_i,b_j]
/// because factors sitting in distinct slots commute.
inline Tensor3 cybe_residual(const Tensor2& r) {
    Tensor3 out;
    for (const auto& [ki, ci] : r)
        for (const auto& [kj, cj] : r) {
            const Scalar c = ci * cj;
            const BasisSym &ai = ki[0], &bi = ki[1], &aj = kj[0], &bj = kj[1];
            for (const auto& [s, cs] : bracket(ai, aj)) out.add_term(Key3{s, bi, bj}, c * cs);
            for (const auto& [s, cs] : bracket(bi, aj)) out.add_term(Key3{ai, s, bj}, c * cs);
            for (const auto& [s, cs] : bracket(bi, bj)) out.add_term(Key3{ai, aj, s}, c * cs);
        }
    return out;
}

/// x . c(r); the modern Yang-Baxter equation asks this to vanish for all x.
inline Tensor3 mybe_defect(const Tensor2& r, const LieElt& x) {
    return act3(x, cybe_residual(r));
}

/// r = a (x) b - b (x) a with a = <d,alpha>^{-1} d and b = L_alpha, so
/// that [a, b] = b. Such r is antisymmetric and satisfies CYBE.
inline Tensor2 michaelis_r(const CartanElt& d, const Degree& alpha) {
    if (alpha.is_zero()) throw ZeroDegree();
    Scalar p = pairing(d, alpha);
    if (p.is_zero()) throw ZeroPairing();
    LieElt a = to_elt(d);
    a *= p.inv();
    LieElt b = lie_L(alpha);
    return tensor(a, b) - tensor(b, a);
}

/// (1 (x) Delta) applied to a tensor square, landing in the cube.
inline Tensor3 coapply_second(const Cobracket& d, const Tensor2& t) {
    Tensor3 out;
    for (const auto& [k, c] : t) {
        Tensor2 inner = d.apply(LieElt::unit(k[1]));
        for (const auto& [k2, c2] : inner) out.add_term(Key3{k[0], k2[0], k2[1]}, c * c2);
    }
    return out;
}

/// Co-Jacobi defect (1 + xi + xi^2)(1 (x) Delta) Delta (x).
inline Tensor3 cojacobi_defect(const Cobracket& d, const LieElt& x) {
    return cyclic_symmetrize(coapply_second(d, d.apply(x)));
}

/// Compatibility (cocycle) defect Delta([x,y]) - x.Delta(y) + y.Delta(x).
inline Tensor2 compatibility_defect(const Cobracket& d, const LieElt& x, const LieElt& y) {
    return d.apply(bracket(x, y)) - act2(x, d.apply(y)) + act2(y, d.apply(x));
}

struct AxiomReport {
    struct PerSym {
        BasisSym sym;
        Tensor2 anti_defect;
        Tensor3 cojacobi;
    };
    struct PerPair {
        BasisSym x, y;
        Tensor2 compat;
    };
    std::vector<PerSym> symbols;
    std::vector<PerPair> pairs;
    std::vector<std::pair<BasisSym, BasisSym>> skipped_pairs;  // bracket leaves the window

    bool all_zero() const {
        for (const auto& s : symbols)
            if (!s.anti_defect.is_zero() || !s.cojacobi.is_zero()) return false;
        for (const auto& p : pairs)
            if (!p.compat.is_zero()) return false;
        return true;
    }
};

namespace detail {

/// Whether every symbol of x has a tabulated value (always true for
/// coboundary cobrackets).
inline bool evaluable(const Cobracket& d, const LieElt& x) {
    auto* t = std::get_if<DerivationTable>(&d.impl);
    if (!t) return true;
    for (const auto& [sym, c] : x)
        if (!t->in_window(sym)) return false;
    return true;
}

}  // namespace detail

/// Exact defects of the three cobracket axioms over a window. Pairs
/// whose bracket cannot be evaluated (tabulated cobracket, bracket
/// outside the window) are recorded as skipped, not guessed.
inline AxiomReport check_cocommutator_axioms(const Cobracket& d,
                                             const std::vector<BasisSym>& window) {
    AxiomReport rep;
    for (const auto& s : window) {
        LieElt x = LieElt::unit(s);
        Tensor2 dx = d.apply(x);
        rep.symbols.push_back({s, antisym_defect(dx), cyclic_symmetrize(coapply_second(d, dx))});
    }
    for (std::size_t i = 0; i < window.size(); ++i)
        for (std::size_t j = i + 1; j < window.size(); ++j) {
            LieElt x = LieElt::unit(window[i]);
            LieElt y = LieElt::unit(window[j]);
            if (!detail::evaluable(d, bracket(x, y))) {
                rep.skipped_pairs.emplace_back(window[i], window[j]);
                continue;
            }
            rep.pairs.push_back({window[i], window[j], compatibility_defect(d, x, y)});
        }
    return rep;
}

/// The two sides of (1 + xi + xi^2)(1 (x) Delta_r) Delta_r (x) = x . c(r),
/// computed along disjoint paths, returned as LHS - RHS (exactly zero
/// for antisymmetric r). Throws NotAntisymmetric if r is not.
inline Tensor3 theorem_identity_defect(const Tensor2& r, const LieElt& x) {
    if (!is_antisymmetric(r)) throw NotAntisymmetric();
    Cobracket d = Cobracket::from_r(r);
    Tensor3 lhs = cojacobi_defect(d, x);
    Tensor3 rhs = mybe_defect(r, x);
    return lhs - rhs;
}

/// The window used throughout the desk-scale checks.
inline std::vector<BasisSym> standard_window() {
    return {BasisSym::d1(),   BasisSym::d2(),   BasisSym::L(1, 0),  BasisSym::L(-1, 0),
            BasisSym::L(0, 1), BasisSym::L(0, -1), BasisSym::L(1, 1), BasisSym::L(-1, -1)};
}

}  // namespace virbialg
