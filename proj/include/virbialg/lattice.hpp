#pragma once

// The grading group: nondegeneracy, separating Cartan elements,
// integer-lattice membership (via Hermite normal form after clearing
// denominators), and a 2x2 basis-change helper.

#include "virbialg/degree.hpp"
#include "virbialg/exact_linalg.hpp"

#include <array>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

namespace virbialg {

struct Lattice {
    std::vector<Degree> generators;
};

/// true iff the generators span C^2, i.e. the 2xk coordinate matrix
/// has rank 2 over Q(i) (rank is invariant under field extension, so
/// the Q(i) computation decides the C question).
inline bool check_nondegenerate(const Lattice& lat) {
    ScalarMatrix m(2);
    for (const auto& g : lat.generators) {
        m[0].push_back(g.c1);
        m[1].push_back(g.c2);
    }
    if (lat.generators.empty()) return false;
    return rank(m) == 2;
}

/// A Cartan element with nonzero pairing against every listed degree.
/// Candidates d1, d2, d1 + k*d2 are pairwise non-proportional, so each
/// degree's annihilator line kills at most one of them; a scan of
/// |degrees| + 2 candidates always succeeds. Empty input returns d1.
inline CartanElt separating_cartan(const std::vector<Degree>& degrees) {
    auto separates = [&](const CartanElt& d) {
        for (const auto& a : degrees)
            if (pairing(d, a).is_zero()) return false;
        return true;
    };
    CartanElt c1(1, 0);
    if (separates(c1)) return c1;
    CartanElt c2(0, 1);
    if (separates(c2)) return c2;
    for (long k = 1;; ++k) {
        CartanElt c(Scalar(1), Scalar(k));
        if (separates(c)) return c;
        if (static_cast<std::size_t>(k) > degrees.size() + 2)
            throw std::logic_error("separating_cartan: scan bound exceeded");
    }
}

namespace detail {

using IntVec4 = std::array<BigInt, 4>;

inline IntVec4 scaled_coords(const Degree& d, const BigInt& den) {
    auto part = [&](const Rat& r) -> BigInt {
        return numerator(r) * (den / denominator(r));
    };
    return {part(d.c1.re), part(d.c1.im), part(d.c2.re), part(d.c2.im)};
}

}  // namespace detail

/// Integer-combination membership. Degrees embed into Q^4 (real and
/// imaginary parts of both coordinates); a common denominator turns
/// the question into membership in an integer lattice, decided by a
/// column-style Hermite normal form.
inline bool member(const Lattice& lat, const Degree& target) {
    using boost::multiprecision::lcm;
    BigInt den(1);
    auto fold = [&](const Scalar& s) {
        den = lcm(den, denominator(s.re));
        den = lcm(den, denominator(s.im));
    };
    for (const auto& g : lat.generators) {
        fold(g.c1);
        fold(g.c2);
    }
    fold(target.c1);
    fold(target.c2);

    std::vector<detail::IntVec4> cols;
    for (const auto& g : lat.generators) cols.push_back(detail::scaled_coords(g, den));
    detail::IntVec4 t = detail::scaled_coords(target, den);

    // Column HNF: after processing row r, exactly one column (moved to
    // the pivot position) is nonzero at row r among the unprocessed ones.
    std::size_t p = 0;
    std::vector<std::pair<std::size_t, std::size_t>> hnf_pivots;  // (row, col)
    for (std::size_t r = 0; r < 4 && p < cols.size(); ++r) {
        for (;;) {
            std::size_t best = cols.size();
            for (std::size_t j = p; j < cols.size(); ++j) {
                if (cols[j][r].is_zero()) continue;
                if (best == cols.size() || abs(cols[j][r]) < abs(cols[best][r])) best = j;
            }
            if (best == cols.size()) break;  // row r is all zero
            std::swap(cols[p], cols[best]);
            bool reduced = true;
            for (std::size_t j = p + 1; j < cols.size(); ++j) {
                if (cols[j][r].is_zero()) continue;
                BigInt q = cols[j][r] / cols[p][r];
                for (std::size_t k = r; k < 4; ++k) cols[j][k] -= q * cols[p][k];
                if (!cols[j][r].is_zero()) reduced = false;
            }
            if (reduced) {
                if (cols[p][r] < 0)
                    for (auto& v : cols[p]) v = -v;
                hnf_pivots.emplace_back(r, p);
                ++p;
                break;
            }
        }
    }

    for (auto [r, j] : hnf_pivots) {
        if (t[r].is_zero()) continue;
        if (t[r] % cols[j][r] != 0) return false;
        BigInt q = t[r] / cols[j][r];
        for (std::size_t k = r; k < 4; ++k) t[k] -= q * cols[j][k];
    }
    for (const auto& v : t)
        if (!v.is_zero()) return false;
    return true;
}

/// Coordinates with respect to a 2x2 basis of degrees (re-denoting
/// two generators as (1,0) and (0,1)).
struct Basis2 {
    Degree e1, e2;
    Scalar det;

    Basis2(Degree a, Degree b) : e1(std::move(a)), e2(std::move(b)) {
        det = e1.c1 * e2.c2 - e2.c1 * e1.c2;
    }

    bool degenerate() const { return det.is_zero(); }

    /// (p, q) with p*e1 + q*e2 = a; Cramer over Q(i).
    std::pair<Scalar, Scalar> express(const Degree& a) const {
        Scalar p = (a.c1 * e2.c2 - e2.c1 * a.c2) / det;
        Scalar q = (e1.c1 * a.c2 - a.c1 * e1.c2) / det;
        return {p, q};
    }
};

/// First pair of independent generators, if any.
inline std::optional<Basis2> spanning_pair(const Lattice& lat) {
    for (std::size_t i = 0; i < lat.generators.size(); ++i)
        for (std::size_t j = i + 1; j < lat.generators.size(); ++j) {
            Basis2 b(lat.generators[i], lat.generators[j]);
            if (!b.degenerate()) return b;
        }
    return std::nullopt;
}

}  // namespace virbialg
