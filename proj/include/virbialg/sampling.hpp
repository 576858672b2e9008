#pragma once

// Deterministic random generators for the invariant suites. Seeded
// mt19937 throughout, so every run sees the same cases.

#include "virbialg/tensor.hpp"

#include <cstdint>
#include <random>

namespace virbialg {

class Sampler {
public:
    explicit Sampler(std::uint32_t seed) : rng_(seed) {}

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rat rational(long radius) {
        long den = 1;
        switch (pick(0, 5)) {
            case 0: den = 2; break;
            case 1: den = 3; break;
            default: break;
        }
        return Rat(pick(-radius * den, radius * den), den);
    }

    /// |Re|, |Im| <= radius; imaginary parts appear in a third of draws.
    Scalar scalar(long radius) {
        Scalar s(rational(radius));
        if (pick(0, 2) == 0) s.im = rational(radius);
        return s;
    }

    Scalar nonzero_scalar(long radius) {
        for (;;) {
            Scalar s = scalar(radius);
            if (!s.is_zero()) return s;
        }
    }

    Degree degree(long radius) { return Degree(scalar(radius), scalar(radius)); }

    Degree nonzero_degree(long radius) {
        for (;;) {
            Degree d = degree(radius);
            if (!d.is_zero()) return d;
        }
    }

    /// Mostly L symbols, the two Cartan generators now and then.
    BasisSym basis_sym(long radius) {
        switch (pick(0, 7)) {
            case 0: return BasisSym::d1();
            case 1: return BasisSym::d2();
            default: return BasisSym::L(nonzero_degree(radius));
        }
    }

    LieElt lie_elt(int max_terms, long radius) {
        LieElt e;
        int n = static_cast<int>(pick(1, max_terms));
        for (int i = 0; i < n; ++i) e.add_term(basis_sym(radius), nonzero_scalar(radius));
        return e;
    }

    LieElt nonzero_lie_elt(int max_terms, long radius) {
        for (;;) {
            LieElt e = lie_elt(max_terms, radius);
            if (!e.is_zero()) return e;
        }
    }

    Tensor2 tensor2(int max_terms, long radius) {
        Tensor2 t;
        int n = static_cast<int>(pick(1, max_terms));
        for (int i = 0; i < n; ++i)
            t.add_term(Key2{basis_sym(radius), basis_sym(radius)}, nonzero_scalar(radius));
        return t;
    }

    Tensor3 tensor3(int max_terms, long radius) {
        Tensor3 t;
        int n = static_cast<int>(pick(1, max_terms));
        for (int i = 0; i < n; ++i)
            t.add_term(Key3{basis_sym(radius), basis_sym(radius), basis_sym(radius)},
                       nonzero_scalar(radius));
        return t;
    }

    /// (1 - twist) of a random tensor: antisymmetric by construction.
    Tensor2 antisym_tensor2(int half_terms, long radius) {
        Tensor2 s = tensor2(half_terms, radius);
        return s - twist(s);
    }

    /// Homogeneous element of the tensor square at the given degree.
    Tensor2 homogeneous_tensor2(const Degree& alpha, int max_terms, long radius) {
        Tensor2 t;
        int n = static_cast<int>(pick(1, max_terms));
        for (int i = 0; i < n; ++i) {
            switch (alpha.is_zero() ? pick(1, 2) : pick(0, 3)) {
                case 0:
                    t.add_term(Key2{pick(0, 1) ? BasisSym::d1() : BasisSym::d2(),
                                    BasisSym::L(alpha)},
                               nonzero_scalar(radius));
                    break;
                case 1: {
                    Degree g = nonzero_degree(radius);
                    if ((alpha - g).is_zero()) g = g + Degree(1, 0);
                    if ((alpha - g).is_zero() || g.is_zero()) break;
                    t.add_term(Key2{BasisSym::L(g), BasisSym::L(alpha - g)}, nonzero_scalar(radius));
                    break;
                }
                case 2:
                    if (alpha.is_zero()) {
                        t.add_term(Key2{pick(0, 1) ? BasisSym::d1() : BasisSym::d2(),
                                        pick(0, 1) ? BasisSym::d1() : BasisSym::d2()},
                                   nonzero_scalar(radius));
                        break;
                    }
                    t.add_term(Key2{BasisSym::L(alpha),
                                    pick(0, 1) ? BasisSym::d1() : BasisSym::d2()},
                               nonzero_scalar(radius));
                    break;
                default:
                    break;
            }
        }
        return t;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace virbialg
