#pragma once

// Command dispatch: takes a parsed script, runs the named operation,
// and renders a deterministic plain-text certificate with sections
// INPUT, VERDICT, WITNESS, DEFECTS, PROBES.

#include "virbialg/cohomology.hpp"
#include "virbialg/parse.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace virbialg {

struct RunConfig {
    long window_radius = 5;
    std::size_t probe_budget = 64;
    int verbosity = 1;
};

struct Certificate {
    std::string verdict;
    std::string text;
    bool ok = false;
};

namespace detail {

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

class CertificateBuilder {
public:
    void input(const std::string& k, const std::string& v) { input_.push_back(k + ": " + v); }
    void witness(const std::string& k, const std::string& v) { witness_.push_back(k + ": " + v); }
    void defect(const std::string& k, const std::string& v) { defects_.push_back(k + ": " + v); }
    void probe(const std::string& k, const std::string& v) { probes_.push_back(k + ": " + v); }
    void verdict(std::string v) { verdict_ = std::move(v); }

    Certificate build() const {
        std::ostringstream os;
        auto section = [&os](const char* name, const std::vector<std::string>& lines) {
            os << name << "\n";
            for (const auto& l : lines) os << l << "\n";
        };
        section("INPUT", input_);
        os << "VERDICT\nverdict: " << verdict_ << "\n";
        section("WITNESS", witness_);
        section("DEFECTS", defects_);
        section("PROBES", probes_);
        Certificate c;
        c.verdict = verdict_;
        c.text = os.str();
        c.ok = verdict_ == "OK" || verdict_ == "TriangularCoboundary";
        return c;
    }

private:
    std::vector<std::string> input_, witness_, defects_, probes_;
    std::string verdict_;
};

}  // namespace detail

class Runner {
public:
    explicit Runner(RunConfig cfg = {}) : cfg_(cfg) {}

    Certificate run(const Script& script) const {
        detail::CertificateBuilder b;
        b.input("command", script.command.name);
        b.input("hash", detail::fnv1a_hex(script.source));
        for (const auto& [name, value] : script.command.args)
            b.input("arg " + name, to_string(value));
        try {
            dispatch(script.command, b);
        } catch (const std::exception& e) {
            b.verdict("Error");
            b.defect("error", e.what());
        }
        return b.build();
    }

private:
    using B = detail::CertificateBuilder;

    static const Value& require(const Command& cmd, const std::string& name) {
        auto it = cmd.args.find(name);
        if (it == cmd.args.end())
            throw TypeCheckError("command '" + cmd.name + "' requires argument '" + name + "'");
        return it->second;
    }

    static Tensor2 as_tensor2(const Value& v, const std::string& what) {
        if (const auto* t = std::get_if<Tensor2>(&v)) return *t;
        if (const auto* s = std::get_if<Scalar>(&v); s && s->is_zero()) return {};
        throw TypeCheckError(what + " must be a tensor2, got " + type_name(v));
    }

    static LieElt as_element(const Value& v, const std::string& what) {
        if (const auto* e = std::get_if<LieElt>(&v)) return *e;
        if (const auto* s = std::get_if<Scalar>(&v); s && s->is_zero()) return {};
        throw TypeCheckError(what + " must be an element, got " + type_name(v));
    }

    static Degree as_degree(const Value& v, const std::string& what) {
        if (const auto* d = std::get_if<Degree>(&v)) return *d;
        throw TypeCheckError(what + " must be a degree, got " + type_name(v));
    }

    static DerivationTable as_table(const Value& v, const std::string& what) {
        if (const auto* t = std::get_if<DerivationTable>(&v)) return *t;
        throw TypeCheckError(what + " must be a table, got " + type_name(v));
    }

    static Cobracket as_cobracket(const Value& v, const std::string& what) {
        if (const auto* t = std::get_if<DerivationTable>(&v)) return Cobracket::tabulated(*t);
        return Cobracket::from_r(as_tensor2(v, what));
    }

    std::vector<BasisSym> window_arg(const Command& cmd) const {
        auto it = cmd.args.find("window");
        if (it == cmd.args.end()) return standard_window();
        if (const auto* w = std::get_if<Window>(&it->second)) return *w;
        throw TypeCheckError("window must be a list of basis symbols");
    }

    void dispatch(const Command& cmd, B& b) const {
        if (cmd.name == "cybe") return cmd_cybe(cmd, b);
        if (cmd.name == "mybe") return cmd_mybe(cmd, b);
        if (cmd.name == "cobracket") return cmd_cobracket(cmd, b);
        if (cmd.name == "michaelis") return cmd_michaelis(cmd, b);
        if (cmd.name == "axioms") return cmd_axioms(cmd, b);
        if (cmd.name == "innerize") return cmd_innerize(cmd, b);
        if (cmd.name == "innerize0") return cmd_innerize0(cmd, b);
        if (cmd.name == "witness") return cmd_witness(cmd, b);
        if (cmd.name == "reduce") return cmd_reduce(cmd, b);
        if (cmd.name == "classify") return cmd_classify(cmd, b);
        throw TypeCheckError("unknown command '" + cmd.name + "'");
    }

    void cmd_cybe(const Command& cmd, B& b) const {
        Tensor2 r = as_tensor2(require(cmd, "r"), "r");
        Tensor3 c = cybe_residual(r);
        b.defect("c(r)", to_string(c));
        b.verdict(c.is_zero() ? "OK" : "CYBEFails");
    }

    void cmd_mybe(const Command& cmd, B& b) const {
        Tensor2 r = as_tensor2(require(cmd, "r"), "r");
        LieElt x = as_element(require(cmd, "x"), "x");
        Tensor3 d = mybe_defect(r, x);
        b.defect("x.c(r)", to_string(d));
        b.verdict(d.is_zero() ? "OK" : "MYBEFails");
    }

    void cmd_cobracket(const Command& cmd, B& b) const {
        Cobracket delta = as_cobracket(require(cmd, "delta"), "delta");
        LieElt x = as_element(require(cmd, "x"), "x");
        b.witness("delta(x)", to_string(delta.apply(x)));
        b.verdict("OK");
    }

    void cmd_michaelis(const Command& cmd, B& b) const {
        LieElt d = as_element(require(cmd, "d"), "d");
        auto cartan = to_cartan(d);
        if (!cartan) throw TypeCheckError("d must lie in span{d1, d2}");
        Degree alpha = as_degree(require(cmd, "alpha"), "alpha");
        Tensor2 r = michaelis_r(*cartan, alpha);
        b.witness("r", to_string(r));
        b.defect("c(r)", to_string(cybe_residual(r)));
        b.defect("antisym", to_string(antisym_defect(r)));
        b.verdict("OK");
    }

    void cmd_axioms(const Command& cmd, B& b) const {
        Cobracket delta = as_cobracket(require(cmd, "delta"), "delta");
        auto window = window_arg(cmd);
        AxiomReport rep = check_cocommutator_axioms(delta, window);
        std::size_t bad = 0;
        for (const auto& s : rep.symbols) {
            if (!s.anti_defect.is_zero()) {
                b.defect("anti[" + to_string(s.sym) + "]", to_string(s.anti_defect));
                ++bad;
            }
            if (!s.cojacobi.is_zero()) {
                b.defect("cojacobi[" + to_string(s.sym) + "]", to_string(s.cojacobi));
                ++bad;
            }
        }
        for (const auto& p : rep.pairs) {
            if (!p.compat.is_zero()) {
                b.defect("compat[" + to_string(p.x) + "," + to_string(p.y) + "]",
                         to_string(p.compat));
                ++bad;
            }
        }
        if (bad == 0) b.defect("defects", "none");
        for (const auto& [x, y] : rep.skipped_pairs)
            b.probe("skipped", "(" + to_string(x) + ", " + to_string(y) + ")");
        b.verdict(bad == 0 ? "OK" : "AxiomsFail");
    }

    void cmd_innerize(const Command& cmd, B& b) const {
        DerivationTable d = as_table(require(cmd, "D"), "D");
        Degree alpha = as_degree(require(cmd, "alpha"), "alpha");
        try {
            HomogeneousWitness w = inner_witness_homogeneous(d, alpha);
            b.witness("a", to_string(w.witness));
            b.probe("cartan", to_string(to_elt(w.probe)));
            b.probe("verified", std::to_string(w.verified) + " window symbols");
            b.verdict("OK");
        } catch (const NotHomogeneous& e) {
            b.defect("error", e.what());
            b.verdict("NotHomogeneous");
        } catch (const VerificationFailed& e) {
            b.defect("fails at", to_string(e.symbol));
            b.verdict("VerificationFailed");
        }
    }

    void cmd_innerize0(const Command& cmd, B& b) const {
        DerivationTable d = as_table(require(cmd, "D"), "D");
        WindowSolveOutcome sol = inner_witness_window(d, cfg_.window_radius);
        b.probe("rank", "a=" + std::to_string(sol.rank_a) + " ab=" + std::to_string(sol.rank_ab) +
                            " unknowns=" + std::to_string(sol.unknowns));
        if (sol.solved()) {
            b.witness("u", to_string(*sol.witness));
            b.verdict("OK");
        } else {
            if (sol.unreachable > 0)
                b.defect("unreachable target coordinates", std::to_string(sol.unreachable));
            b.verdict("NoSolution");
        }
    }

    void cmd_witness(const Command& cmd, B& b) const {
        const Value& v = require(cmd, "c");
        try {
            LieElt x;
            std::string moved;
            if (const auto* t3 = std::get_if<Tensor3>(&v)) {
                x = centralizer_witness(*t3, cfg_.probe_budget);
                moved = to_string(act3(x, *t3));
            } else {
                Tensor2 t2 = as_tensor2(v, "c");
                x = centralizer_witness(t2, cfg_.probe_budget);
                moved = to_string(act2(x, t2));
            }
            b.witness("x", to_string(x));
            b.defect("x.c", moved);
            b.verdict("OK");
        } catch (const InconclusiveBudgetExhausted&) {
            b.probe("budget", std::to_string(cfg_.probe_budget));
            b.verdict("InconclusiveBudgetExhausted");
        }
    }

    void cmd_reduce(const Command& cmd, B& b) const {
        Tensor2 r = as_tensor2(require(cmd, "r"), "r");
        ReduceOutcome out = reduce_to_antisymmetric(r);
        if (cfg_.verbosity > 0)
            for (std::size_t i = 0; i < out.probe_log.size(); ++i)
                b.probe("log[" + std::to_string(i) + "]", out.probe_log[i]);
        if (out.reduced) {
            b.witness("w", to_string(out.witness));
            b.defect("residual", to_string(out.residual));
            b.verdict("OK");
        } else {
            b.probe("counterexample", to_string(*out.counterexample));
            b.defect("defect", to_string(antisym_defect(act2(*out.counterexample, r))));
            b.verdict("NotAntisymmetric");
        }
    }

    void cmd_classify(const Command& cmd, B& b) const {
        DerivationTable d = as_table(require(cmd, "delta"), "delta");
        ClassifyCertificate cert = classify(d, cfg_.window_radius);
        b.witness("r", to_string(cert.r));
        if (cert.bad_pair)
            b.defect("cocycle defect at (" + to_string(cert.bad_pair->first) + ", " +
                         to_string(cert.bad_pair->second) + ")",
                     to_string(cert.bad_defect));
        if (cert.probe) b.probe("counterexample", to_string(*cert.probe));
        if (cert.verdict == Verdict::CYBEFails) b.defect("c(r)", to_string(cert.cybe));
        if (cert.unknowns > 0)
            b.probe("rank", "a=" + std::to_string(cert.rank_a) +
                                " ab=" + std::to_string(cert.rank_ab) +
                                " unknowns=" + std::to_string(cert.unknowns));
        if (cfg_.verbosity > 0)
            for (std::size_t i = 0; i < cert.log.size(); ++i)
                b.probe("log[" + std::to_string(i) + "]", cert.log[i]);
        if (!cert.detail.empty()) b.defect("detail", cert.detail);
        b.probe("window agreement", cert.window_agreement ? "exact" : "mismatch");
        b.verdict(to_string(cert.verdict));
    }

    RunConfig cfg_;
};

inline Certificate run_script_text(const std::string& text, const RunConfig& cfg = {}) {
    return Runner(cfg).run(parse_script(text));
}

}  // namespace virbialg
