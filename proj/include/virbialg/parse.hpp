#pragma once

// Lexer, expression parser and script parser for the little input
// language:
//
//   stmt    := ident '=' expr ';'
//   command := ident '(' (ident '=' expr),* ')' ';'?
//   expr    := ['-'] unit (('+'|'-') unit)*
//   unit    := scalar ['*']? chain? | chain | degree | list | table | call
//   chain   := atom ('(x)' atom ('(x)' atom)?)?
//   atom    := 'L' degree | 'd1' | 'd2' | ident | call
//   degree  := '(' scalar ';' scalar ')'
//   list    := '[' atom,* ']'
//   table   := 'table' '(' (atom '->' expr),* ')'
//   call    := 'michaelis' '(' name '=' expr, name '=' expr ')'
//
// '#' starts a comment; whitespace is insignificant. Compound scalar
// coefficients may be parenthesized: (1/2+i)*L(1;0).

#include "virbialg/bialgebra.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace virbialg {

struct SyntaxError : std::runtime_error {
    SyntaxError(int line_, int col_, const std::string& what)
        : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + what),
          line(line_),
          col(col_) {}
    int line, col;
};

struct TypeCheckError : std::runtime_error {
    explicit TypeCheckError(const std::string& what)
        : std::runtime_error("type error: " + what), message(what) {}
    std::string message;
};

using Window = std::vector<BasisSym>;
using Value = std::variant<Scalar, Degree, LieElt, Tensor2, Tensor3, DerivationTable, Window>;

inline std::string type_name(const Value& v) {
    switch (v.index()) {
        case 0: return "scalar";
        case 1: return "degree";
        case 2: return "element";
        case 3: return "tensor2";
        case 4: return "tensor3";
        case 5: return "table";
        default: return "window";
    }
}

inline std::string to_string(const Window& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += to_string(w[i]);
    }
    return s + "]";
}

inline std::string to_string(const DerivationTable& t) {
    std::string s = "table(";
    bool first = true;
    for (const auto& [k, v] : t.values) {
        if (!first) s += ", ";
        first = false;
        s += to_string(k) + " -> " + to_string(v);
    }
    return s + ")";
}

inline std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return to_string(x); }, v);
}

/// Cartan part of an element that has no L terms.
inline std::optional<CartanElt> to_cartan(const LieElt& e) {
    CartanElt c;
    for (const auto& [sym, coeff] : e) {
        switch (sym.kind) {
            case BasisSym::Kind::D1: c.a1 = coeff; break;
            case BasisSym::Kind::D2: c.a2 = coeff; break;
            default: return std::nullopt;
        }
    }
    return c;
}

struct Command {
    std::string name;
    std::map<std::string, Value> args;
};

struct Script {
    std::vector<std::pair<std::string, Value>> bindings;
    Command command;
    std::string source;
};

namespace detail {

enum class Tok {
    End, Ident, Number, Plus, Minus, Star, Slash,
    LParen, RParen, LBrack, RBrack, Semi, Comma, Equal, Arrow, TensorOp,
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t) { out.push_back({k, std::move(t), line, col}); };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        if (c == '(' && i + 2 < src.size() && src[i + 1] == 'x' && src[i + 2] == ')') {
            push(Tok::TensorOp, "(x)");
            i += 3;
            col += 3;
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            push(Tok::Arrow, "->");
            i += 2;
            col += 2;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            push(Tok::Number, src.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                      src[j] == '_'))
                ++j;
            push(Tok::Ident, src.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '[': k = Tok::LBrack; break;
            case ']': k = Tok::RBrack; break;
            case ';': k = Tok::Semi; break;
            case ',': k = Tok::Comma; break;
            case '=': k = Tok::Equal; break;
            default:
                throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
        }
        push(k, std::string(1, c));
        ++col;
        ++i;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

}  // namespace detail

class Parser {
public:
    explicit Parser(std::string source)
        : source_(std::move(source)), toks_(detail::lex(source_)) {}

    Script parse_script() {
        Script script;
        script.source = source_;
        bool have_command = false;
        while (peek().kind != detail::Tok::End) {
            const detail::Token& name = expect(detail::Tok::Ident, "a statement");
            if (have_command)
                throw SyntaxError(name.line, name.col, "the command must be the last statement");
            if (peek().kind == detail::Tok::Equal) {
                next();
                try {
                    bind(name, parse_expr());
                } catch (const TypeCheckError& e) {
                    throw TypeCheckError("in binding '" + name.text + "': " + e.message);
                }
                expect(detail::Tok::Semi, "';' after a binding");
                script.bindings.emplace_back(name.text, env_.at(name.text));
            } else if (peek().kind == detail::Tok::LParen) {
                script.command = parse_command(name.text);
                if (peek().kind == detail::Tok::Semi) next();
                have_command = true;
            } else {
                throw SyntaxError(peek().line, peek().col, "expected '=' or '(' after '" +
                                                               name.text + "'");
            }
        }
        if (!have_command)
            throw SyntaxError(peek().line, peek().col, "script must end with a command");
        return script;
    }

    /// A single expression spanning the whole input.
    Value parse_single() {
        Value v = parse_expr();
        if (peek().kind != detail::Tok::End)
            throw SyntaxError(peek().line, peek().col, "trailing input after expression");
        return v;
    }

private:
    using Tok = detail::Tok;
    using Token = detail::Token;

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    const Token& expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            throw SyntaxError(peek().line, peek().col,
                              "expected " + what + ", found '" + peek().text + "'");
        return next();
    }

    void bind(const Token& name, Value v) {
        static const char* reserved[] = {"L", "d1", "d2", "i", "table", "michaelis"};
        for (const char* r : reserved)
            if (name.text == r)
                throw TypeCheckError("binding '" + name.text + "' shadows a reserved word");
        if (env_.count(name.text))
            throw TypeCheckError("binding '" + name.text + "' assigned twice");
        env_.emplace(name.text, std::move(v));
    }

    Command parse_command(const std::string& name) {
        Command cmd;
        cmd.name = name;
        expect(Tok::LParen, "'('");
        if (peek().kind != Tok::RParen) {
            for (;;) {
                const Token& arg = expect(Tok::Ident, "an argument name");
                expect(Tok::Equal, "'=' after argument name");
                if (cmd.args.count(arg.text))
                    throw TypeCheckError("argument '" + arg.text + "' given twice");
                cmd.args.emplace(arg.text, parse_expr());
                if (peek().kind != Tok::Comma) break;
                next();
            }
        }
        expect(Tok::RParen, "')'");
        return cmd;
    }

    // --- scalars ---

    // NUMBER ['/' NUMBER] ['i']  |  'i'; fails without consuming only
    // via the saved-position discipline of the callers.
    std::optional<std::pair<Scalar, bool>> try_simple_scalar() {
        if (peek().kind == Tok::Ident && peek().text == "i") {
            next();
            return std::make_pair(Scalar::imag_unit(), true);
        }
        if (peek().kind != Tok::Number) return std::nullopt;
        BigInt num(next().text);
        BigInt den(1);
        if (peek().kind == Tok::Slash) {
            next();
            const Token& d = expect(Tok::Number, "a denominator");
            den = BigInt(d.text);
            if (den.is_zero()) throw SyntaxError(d.line, d.col, "zero denominator");
        }
        Rat r(num, den);
        if (peek().kind == Tok::Ident && peek().text == "i") {
            next();
            return std::make_pair(Scalar(Rat(0), r), true);
        }
        return std::make_pair(Scalar(r), false);
    }

    Scalar parse_scalar_literal(bool allow_sign) {
        bool neg = false;
        if (allow_sign && (peek().kind == Tok::Plus || peek().kind == Tok::Minus))
            neg = next().kind == Tok::Minus;
        auto first = try_simple_scalar();
        if (!first)
            throw SyntaxError(peek().line, peek().col, "expected a scalar literal");
        Scalar v = neg ? -first->first : first->first;
        if (!first->second &&
            (peek().kind == Tok::Plus || peek().kind == Tok::Minus)) {
            std::size_t save = pos_;
            bool neg2 = next().kind == Tok::Minus;
            auto second = try_simple_scalar();
            if (second && second->second)
                v += neg2 ? -second->first : second->first;
            else
                pos_ = save;  // the +/- belongs to the surrounding sum
        }
        return v;
    }

    Degree parse_degree_tail() {  // after '('
        Scalar a = parse_scalar_literal(true);
        expect(Tok::Semi, "';' inside a degree");
        Scalar b = parse_scalar_literal(true);
        expect(Tok::RParen, "')' closing a degree");
        return Degree(std::move(a), std::move(b));
    }

    // --- atoms ---

    struct Atom {
        bool zero = false;  // L(0;0): the zero element, not a symbol
        BasisSym sym;
    };

    bool at_basis_atom() const {
        return peek().kind == Tok::Ident &&
               (peek().text == "L" || peek().text == "d1" || peek().text == "d2");
    }

    Atom parse_basis_atom() {
        const Token& t = expect(Tok::Ident, "a basis symbol");
        if (t.text == "d1") return {false, BasisSym::d1()};
        if (t.text == "d2") return {false, BasisSym::d2()};
        if (t.text != "L")
            throw SyntaxError(t.line, t.col, "expected L(...), d1 or d2, found '" + t.text + "'");
        expect(Tok::LParen, "'(' after L");
        Degree d = parse_degree_tail();
        if (d.is_zero()) return {true, BasisSym::d1()};
        return {false, BasisSym::L(d)};
    }

    BasisSym parse_strict_basis_atom(const char* where) {
        const Token& at = peek();
        Atom a = parse_basis_atom();
        if (a.zero)
            throw SyntaxError(at.line, at.col,
                              std::string("L(0;0) is the zero element, not a symbol, in ") + where);
        return a.sym;
    }

    // --- composite literals ---

    Value parse_window_list() {
        expect(Tok::LBrack, "'['");
        Window w;
        if (peek().kind != Tok::RBrack) {
            for (;;) {
                w.push_back(parse_strict_basis_atom("a window list"));
                if (peek().kind != Tok::Comma) break;
                next();
            }
        }
        expect(Tok::RBrack, "']'");
        return w;
    }

    Value parse_table() {
        next();  // 'table'
        expect(Tok::LParen, "'(' after table");
        DerivationTable t;
        if (peek().kind != Tok::RParen) {
            for (;;) {
                BasisSym key = parse_strict_basis_atom("a table key");
                expect(Tok::Arrow, "'->' after a table key");
                Value v = parse_expr();
                if (auto* t2 = std::get_if<Tensor2>(&v))
                    t.set(key, std::move(*t2));
                else if (auto* s = std::get_if<Scalar>(&v); s && s->is_zero())
                    t.set(key, Tensor2{});
                else
                    throw TypeCheckError("table value for " + to_string(key) +
                                         " must be a tensor2, got " + type_name(v));
                if (peek().kind != Tok::Comma) break;
                next();
            }
        }
        expect(Tok::RParen, "')' closing table");
        return t;
    }

    Value parse_michaelis_call() {
        next();  // 'michaelis'
        expect(Tok::LParen, "'(' after michaelis");
        std::map<std::string, Value> args;
        for (;;) {
            const Token& arg = expect(Tok::Ident, "an argument name");
            expect(Tok::Equal, "'='");
            args.emplace(arg.text, parse_expr());
            if (peek().kind != Tok::Comma) break;
            next();
        }
        expect(Tok::RParen, "')'");
        auto di = args.find("d");
        auto ai = args.find("alpha");
        if (di == args.end() || ai == args.end() || args.size() != 2)
            throw TypeCheckError("michaelis takes exactly d=<element>, alpha=<degree>");
        auto* delt = std::get_if<LieElt>(&di->second);
        auto* alpha = std::get_if<Degree>(&ai->second);
        if (!delt || !alpha)
            throw TypeCheckError("michaelis takes d=<element>, alpha=<degree>");
        auto cartan = to_cartan(*delt);
        if (!cartan) throw TypeCheckError("michaelis: d must lie in span{d1, d2}");
        return michaelis_r(*cartan, *alpha);
    }

    // --- units and sums ---

    struct Unit {
        bool scalar_only = false;
        Scalar s;  // value when scalar_only
        Value v;   // value otherwise
    };

    bool at_chain_start() const {
        if (peek().kind != Tok::Ident) return false;
        return peek().text != "table";  // idents, basis atoms and michaelis start chains
    }

    // atom ['(x)' atom ['(x)' atom]] scaled by coeff.
    Unit parse_chain(const Scalar& coeff) {
        if (peek().text == "michaelis") {
            Value v = parse_michaelis_call();
            Tensor2 t = std::get<Tensor2>(std::move(v));
            t *= coeff;
            return {false, Scalar(0), std::move(t)};
        }
        if (!at_basis_atom()) {
            const Token& id = expect(Tok::Ident, "an identifier");
            auto it = env_.find(id.text);
            if (it == env_.end())
                throw TypeCheckError("unknown binding '" + id.text + "'");
            if (peek().kind == Tok::TensorOp)
                throw TypeCheckError("tensor product operands must be basis symbols, not '" +
                                     id.text + "'");
            return scale_value(it->second, coeff, id.text);
        }
        std::vector<Atom> atoms;
        atoms.push_back(parse_basis_atom());
        while (peek().kind == Tok::TensorOp && atoms.size() < 3) {
            next();
            atoms.push_back(parse_basis_atom());
        }
        if (peek().kind == Tok::TensorOp)
            throw SyntaxError(peek().line, peek().col, "tensor factors beyond 3 are not supported");
        bool zero = false;
        for (const auto& a : atoms) zero = zero || a.zero;
        if (atoms.size() == 1) {
            LieElt e;
            if (!zero) e.add_term(atoms[0].sym, coeff);
            return {false, Scalar(0), std::move(e)};
        }
        if (atoms.size() == 2) {
            Tensor2 t;
            if (!zero) t.add_term(Key2{atoms[0].sym, atoms[1].sym}, coeff);
            return {false, Scalar(0), std::move(t)};
        }
        Tensor3 t;
        if (!zero) t.add_term(Key3{atoms[0].sym, atoms[1].sym, atoms[2].sym}, coeff);
        return {false, Scalar(0), std::move(t)};
    }

    Unit scale_value(const Value& v, const Scalar& coeff, const std::string& name) {
        if (const auto* s = std::get_if<Scalar>(&v)) return {true, coeff * *s, Value{}};
        if (const auto* e = std::get_if<LieElt>(&v)) {
            LieElt r = *e;
            r *= coeff;
            return {false, Scalar(0), std::move(r)};
        }
        if (const auto* t = std::get_if<Tensor2>(&v)) {
            Tensor2 r = *t;
            r *= coeff;
            return {false, Scalar(0), std::move(r)};
        }
        if (const auto* t = std::get_if<Tensor3>(&v)) {
            Tensor3 r = *t;
            r *= coeff;
            return {false, Scalar(0), std::move(r)};
        }
        if (!coeff.is_one())
            throw TypeCheckError("cannot scale " + type_name(v) + " '" + name + "'");
        return {false, Scalar(0), v};
    }

    Unit parse_unit() {
        if (peek().kind == Tok::LBrack) return {false, Scalar(0), parse_window_list()};
        if (peek().kind == Tok::Ident && peek().text == "table")
            return {false, Scalar(0), parse_table()};

        if (peek().kind == Tok::LParen) {
            next();
            Scalar s = parse_scalar_literal(true);
            if (peek().kind == Tok::Semi) {
                next();
                Scalar s2 = parse_scalar_literal(true);
                expect(Tok::RParen, "')' closing a degree");
                return {false, Scalar(0), Degree(std::move(s), std::move(s2))};
            }
            expect(Tok::RParen, "')' closing a scalar");
            if (peek().kind == Tok::Star) next();
            if (at_chain_start()) return parse_chain(s);
            return {true, std::move(s), Value{}};
        }

        if (peek().kind == Tok::Number ||
            (peek().kind == Tok::Ident && peek().text == "i" &&
             !(peek(1).kind == Tok::TensorOp))) {
            Scalar s = parse_scalar_literal(false);
            if (peek().kind == Tok::Star) next();
            if (at_chain_start()) return parse_chain(s);
            return {true, std::move(s), Value{}};
        }

        if (at_chain_start()) return parse_chain(Scalar(1));
        throw SyntaxError(peek().line, peek().col, "expected an expression, found '" +
                                                       peek().text + "'");
    }

    static void negate_unit(Unit& u) {
        if (u.scalar_only) {
            u.s = -u.s;
            return;
        }
        if (auto* e = std::get_if<LieElt>(&u.v)) {
            *e = -*e;
            return;
        }
        if (auto* t = std::get_if<Tensor2>(&u.v)) {
            *t = -*t;
            return;
        }
        if (auto* t = std::get_if<Tensor3>(&u.v)) {
            *t = -*t;
            return;
        }
        throw TypeCheckError("cannot negate a " + type_name(u.v));
    }

    // A unit with an optional leading sign. When a scalar literal
    // follows the sign, the sign belongs to the literal itself
    // ("-2-17/3i" is (-2) + (-17/3)i, not -(2 - 17/3 i)), so it is
    // left for the literal parser to consume.
    Unit parse_signed_unit() {
        if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
            const Token& after = peek(1);
            bool literal_follows =
                after.kind == Tok::Number || (after.kind == Tok::Ident && after.text == "i");
            if (literal_follows) {
                Scalar s = parse_scalar_literal(true);
                if (peek().kind == Tok::Star) next();
                if (at_chain_start()) return parse_chain(s);
                return {true, std::move(s), Value{}};
            }
            bool neg = next().kind == Tok::Minus;
            Unit u = parse_unit();
            if (neg) negate_unit(u);
            return u;
        }
        return parse_unit();
    }

    Value parse_expr() {
        Unit acc = parse_signed_unit();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Unit u = parse_signed_unit();
            if (acc.scalar_only && u.scalar_only) {
                acc.s += u.s;
                continue;
            }
            if (acc.scalar_only || u.scalar_only)
                throw TypeCheckError("cannot add a scalar and a " +
                                     type_name(acc.scalar_only ? u.v : acc.v));
            if (acc.v.index() != u.v.index())
                throw TypeCheckError("cannot add " + type_name(acc.v) + " and " + type_name(u.v));
            if (auto* e = std::get_if<LieElt>(&acc.v))
                *e += std::get<LieElt>(u.v);
            else if (auto* t2 = std::get_if<Tensor2>(&acc.v))
                *t2 += std::get<Tensor2>(u.v);
            else if (auto* t3 = std::get_if<Tensor3>(&acc.v))
                *t3 += std::get<Tensor3>(u.v);
            else
                throw TypeCheckError("cannot add values of type " + type_name(acc.v));
        }
        if (acc.scalar_only) return acc.s;
        return acc.v;
    }

    std::string source_;
    std::vector<detail::Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, Value> env_;
};

inline Script parse_script(const std::string& source) { return Parser(source).parse_script(); }

inline Value parse_value(const std::string& source) { return Parser(source).parse_single(); }

inline Scalar parse_scalar(const std::string& s) {
    Value v = parse_value(s);
    if (auto* x = std::get_if<Scalar>(&v)) return *x;
    throw TypeCheckError("expected a scalar, got " + type_name(v));
}

inline Degree parse_degree(const std::string& s) {
    Value v = parse_value(s);
    if (auto* x = std::get_if<Degree>(&v)) return *x;
    throw TypeCheckError("expected a degree, got " + type_name(v));
}

inline LieElt parse_element(const std::string& s) {
    Value v = parse_value(s);
    if (auto* x = std::get_if<LieElt>(&v)) return *x;
    if (auto* x = std::get_if<Scalar>(&v); x && x->is_zero()) return {};
    throw TypeCheckError("expected an element, got " + type_name(v));
}

inline Tensor2 parse_tensor2(const std::string& s) {
    Value v = parse_value(s);
    if (auto* x = std::get_if<Tensor2>(&v)) return *x;
    if (auto* x = std::get_if<Scalar>(&v); x && x->is_zero()) return {};
    throw TypeCheckError("expected a tensor2, got " + type_name(v));
}

inline Tensor3 parse_tensor3(const std::string& s) {
    Value v = parse_value(s);
    if (auto* x = std::get_if<Tensor3>(&v)) return *x;
    if (auto* x = std::get_if<Scalar>(&v); x && x->is_zero()) return {};
    throw TypeCheckError("expected a tensor3, got " + type_name(v));
}

}  // namespace virbialg
