#pragma once

// The embedded invariant suite behind `virbialg selfcheck`: a compact,
// deterministic sweep over the structural identities the library rests
// on. Exact equality everywhere.

#include "virbialg/cohomology.hpp"
#include "virbialg/parse.hpp"
#include "virbialg/sampling.hpp"
#include "virbialg/script.hpp"

#include <functional>
#include <ostream>
#include <string>

namespace virbialg {

namespace detail {

class CheckHarness {
public:
    explicit CheckHarness(std::ostream& os) : os_(os) {}

    void section(const std::string& name, int cases, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        os_ << (ok ? "[ PASS ] " : "[ FAIL ] ") << name << " (" << cases << " cases)" << note
            << "\n";
        if (!ok) ++failures_;
    }

    bool good() const { return failures_ == 0; }

private:
    std::ostream& os_;
    int failures_ = 0;
};

}  // namespace detail

inline bool run_selfcheck(std::ostream& os, const RunConfig& cfg = {}) {
    detail::CheckHarness h(os);
    const long R = cfg.window_radius;

    h.section("scalar field axioms", 200, [&] {
        Sampler s(101);
        for (int i = 0; i < 200; ++i) {
            Scalar a = s.scalar(R), b = s.scalar(R), c = s.scalar(R);
            if ((a + b) + c != a + (b + c)) return false;
            if ((a * b) * c != a * (b * c)) return false;
            if (a * (b + c) != a * b + a * c) return false;
            if (a + b != b + a || a * b != b * a) return false;
            if (!a.is_zero() && a * a.inv() != Scalar(1)) return false;
        }
        return true;
    });

    h.section("order compatible with addition", 200, [&] {
        Sampler s(102);
        for (int i = 0; i < 200; ++i) {
            Scalar a = s.scalar(R), b = s.scalar(R), c = s.scalar(R);
            if (cmp(a, b) != cmp(a + c, b + c)) return false;
        }
        return true;
    });

    h.section("pairing bilinearity", 100, [&] {
        Sampler s(103);
        for (int i = 0; i < 100; ++i) {
            CartanElt d(s.scalar(R), s.scalar(R));
            Degree a = s.degree(R), b = s.degree(R);
            if (pairing(d, a + b) != pairing(d, a) + pairing(d, b)) return false;
        }
        return true;
    });

    h.section("bracket antisymmetry and Jacobi", 200, [&] {
        Sampler s(104);
        for (int i = 0; i < 200; ++i) {
            LieElt x = s.lie_elt(4, R), y = s.lie_elt(4, R), z = s.lie_elt(4, R);
            if (!(bracket(x, y) + bracket(y, x)).is_zero()) return false;
            if (!check_jacobi(x, y, z).is_zero()) return false;
        }
        return true;
    });

    h.section("diagonal action is a module action", 100, [&] {
        Sampler s(105);
        for (int i = 0; i < 100; ++i) {
            LieElt x = s.lie_elt(3, R), y = s.lie_elt(3, R);
            Tensor2 t = s.tensor2(3, R);
            Tensor3 u = s.tensor3(3, R);
            if (act2(bracket(x, y), t) != act2(x, act2(y, t)) - act2(y, act2(x, t))) return false;
            if (act3(bracket(x, y), u) != act3(x, act3(y, u)) - act3(y, act3(x, u))) return false;
        }
        return true;
    });

    h.section("action commutes with twist and cyclic", 100, [&] {
        Sampler s(106);
        for (int i = 0; i < 100; ++i) {
            LieElt x = s.lie_elt(3, R);
            Tensor2 t = s.tensor2(3, R);
            Tensor3 u = s.tensor3(3, R);
            if (twist(act2(x, t)) != act2(x, twist(t))) return false;
            if (cyclic(act3(x, u)) != act3(x, cyclic(u))) return false;
            if (twist(twist(t)) != t) return false;
            if (cyclic(cyclic(cyclic(u))) != u) return false;
        }
        return true;
    });

    h.section("Michaelis family satisfies CYBE and the axioms", 10, [&] {
        Sampler s(107);
        for (int i = 0; i < 10; ++i) {
            CartanElt d(s.scalar(R), s.scalar(R));
            Degree alpha = s.nonzero_degree(R);
            if (pairing(d, alpha).is_zero()) continue;
            Tensor2 r = michaelis_r(d, alpha);
            if (!cybe_residual(r).is_zero()) return false;
            if (!is_antisymmetric(r)) return false;
            if (!check_cocommutator_axioms(Cobracket::from_r(r), standard_window()).all_zero())
                return false;
        }
        return true;
    });

    h.section("coboundary bridge identity", 50, [&] {
        Sampler s(108);
        for (int i = 0; i < 50; ++i) {
            Tensor2 r = s.antisym_tensor2(3, R);
            LieElt x = s.lie_elt(3, R);
            if (!theorem_identity_defect(r, x).is_zero()) return false;
        }
        return true;
    });

    h.section("inner witness round-trip, nonzero degree", 25, [&] {
        Sampler s(109);
        for (int i = 0; i < 25; ++i) {
            Degree alpha = s.nonzero_degree(2);
            Tensor2 u = s.homogeneous_tensor2(alpha, 2, 2);
            if (u.is_zero() || !is_homogeneous(u, alpha)) continue;
            DerivationTable d;
            for (const auto& sym : standard_window())
                d.set(sym, act2(LieElt::unit(sym), u));
            if (inner_witness_homogeneous(d, alpha).witness != u) return false;
        }
        return true;
    });

    h.section("inner witness round-trip, degree zero", 10, [&] {
        Sampler s(110);
        for (int i = 0; i < 10; ++i) {
            Tensor2 u = s.homogeneous_tensor2(Degree{}, 2, 2);
            DerivationTable d;
            for (const auto& sym : standard_window())
                d.set(sym, act2(LieElt::unit(sym), u));
            WindowSolveOutcome sol = inner_witness_window(d);
            if (!sol.solved()) return false;
            for (const auto& sym : standard_window())
                if (act2(LieElt::unit(sym), *sol.witness) != act2(LieElt::unit(sym), u))
                    return false;
        }
        return true;
    });

    h.section("antisymmetric reduction round-trip", 30, [&] {
        Sampler s(111);
        for (int i = 0; i < 25; ++i) {
            Tensor2 r = s.antisym_tensor2(3, R);
            ReduceOutcome out = reduce_to_antisymmetric(r);
            if (!out.reduced || !out.residual.is_zero()) return false;
            if (detail::one_minus_twist(out.witness) != r) return false;
        }
        for (int i = 0; i < 5; ++i) {
            Tensor2 t = s.tensor2(2, R);
            Tensor2 sym = t + twist(t);
            if (sym.is_zero()) continue;
            ReduceOutcome out = reduce_to_antisymmetric(sym);
            if (out.reduced || !out.counterexample) return false;
            if (antisym_defect(act2(*out.counterexample, sym)).is_zero()) return false;
        }
        return true;
    });

    h.section("centralizer witness search", 25, [&] {
        Sampler s(112);
        int found = 0;
        for (int attempts = 0; found < 25 && attempts < 2000; ++attempts) {
            Tensor2 r = s.antisym_tensor2(3, R);
            Tensor3 c = cybe_residual(r);
            if (c.is_zero()) continue;
            ++found;
            LieElt x = centralizer_witness(c, cfg.probe_budget);
            if (act3(x, c).is_zero()) return false;
        }
        return found == 25;
    });

    h.section("print/parse round-trip", 200, [&] {
        Sampler s(113);
        for (int i = 0; i < 50; ++i) {
            Scalar sc = s.scalar(R);
            if (parse_scalar(to_string(sc)) != sc) return false;
            Degree dg = s.degree(R);
            if (parse_degree(to_string(dg)) != dg) return false;
            LieElt e = s.lie_elt(4, R);
            if (parse_element(to_string(e)) != e) return false;
            Tensor2 t = s.tensor2(4, R);
            if (parse_tensor2(to_string(t)) != t) return false;
        }
        return true;
    });

    return h.good();
}

}  // namespace virbialg
