/*
 * dsl.hpp
 * -------
 * Line-oriented definition language for algebras, morphisms, sections, and
 * cocycle data, plus the element-expression parser shared by the CLI.  The
 * grammar is published in docs/definition-grammar.ebnf; parse errors carry
 * line and column.  Canonical serialization round-trips byte-identically
 * after one normalization pass.
 */
#pragma once

#include "examples.hpp"

#include <sstream>

namespace lierine {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " +
                             msg),
          line(l), col(c) {}
};

// ---------------------------------------------------------------------------
// Expression values
// ---------------------------------------------------------------------------

/*
 * Evaluated expression: a base-ring scalar, an enveloping-algebra element, a
 * plain tensor, a crossed element, or a derivation (anchor expressions).
 */
struct Value {
    enum class Kind { Scalar, Elem, Tensor, Crossed, Deriv };
    Kind kind = Kind::Scalar;
    Poly poly{0};
    UEAElement elem;
    TensorElement tensor;
    CrossedElement crossed;
    Derivation deriv{0};

    static Value scalar(Poly p) {
        Value v;
        v.kind = Kind::Scalar;
        v.poly = std::move(p);
        return v;
    }
    static Value element(UEAElement e) {
        Value v;
        v.kind = Kind::Elem;
        v.elem = std::move(e);
        return v;
    }
    static Value tensor_of(TensorElement t) {
        Value v;
        v.kind = Kind::Tensor;
        v.tensor = std::move(t);
        return v;
    }
    static Value crossed_of(CrossedElement c) {
        Value v;
        v.kind = Kind::Crossed;
        v.crossed = std::move(c);
        return v;
    }
    static Value derivation(Derivation d) {
        Value v;
        v.kind = Kind::Deriv;
        v.deriv = std::move(d);
        return v;
    }
};

/*
 * Name-resolution scope for expressions: generator names map to elements of
 * a context (or two contexts when a crossed product is in scope), base
 * variables map to scalars.
 */
struct ElementScope {
    int nvars = 0;
    std::vector<std::string> var_names;
    CtxPtr primary;                           // generators for Elem atoms
    const CrossedContext* crossed = nullptr;  // enables '#': B-slot generators
    CtxPtr partner;                           // right context for '#'

    int var_index(const std::string& s) const {
        for (size_t i = 0; i < var_names.size(); ++i)
            if (var_names[i] == s) return (int)i;
        return -1;
    }
    int gen_index(const CtxPtr& c, const std::string& s) const {
        if (!c) return -1;
        for (int i = 0; i < c->rank(); ++i)
            if (c->label(i) == s) return i;
        return -1;
    }
};

inline ElementScope scope_for_context(const CtxPtr& ctx) {
    ElementScope s;
    s.nvars = ctx->nvars();
    for (int i = 0; i < s.nvars; ++i) s.var_names.push_back(ctx->var_label(i));
    s.primary = ctx;
    return s;
}

inline ElementScope scope_for_crossed(const CrossedContext* cc) {
    ElementScope s = scope_for_context(cc->kernel.g_ctx);
    s.crossed = cc;
    s.partner = cc->kernel.h_ctx;
    return s;
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
    enum class Type { Number, Ident, Op, Deriv, End };
    Type type = Type::End;
    std::string text; // ident name, operator spelling, or derivative variable
    Rational num;
    int col = 0;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : src(s), line(line) {}

    Token next() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
        Token t;
        t.col = (int)pos + 1;
        if (pos >= src.size()) return t;
        char c = src[pos];
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            t.type = Token::Type::Number;
            t.num = Integer(src.substr(start, pos - start));
            return t;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_' || src[pos] == '\''))
                ++pos;
            std::string word = src.substr(start, pos - start);
            // Derivative atom: d/VAR.
            if (word == "d" && pos < src.size() && src[pos] == '/') {
                size_t save = pos;
                ++pos;
                size_t vstart = pos;
                while (pos < src.size() &&
                       (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
                    ++pos;
                if (pos > vstart) {
                    t.type = Token::Type::Deriv;
                    t.text = src.substr(vstart, pos - vstart);
                    return t;
                }
                pos = save;
            }
            t.type = Token::Type::Ident;
            t.text = word;
            return t;
        }
        // UTF-8 tensor sign.
        if ((unsigned char)c == 0xE2 && pos + 2 < src.size() &&
            (unsigned char)src[pos + 1] == 0x8A && (unsigned char)src[pos + 2] == 0x97) {
            pos += 3;
            t.type = Token::Type::Op;
            t.text = "(x)";
            return t;
        }
        if (std::string("+-*^()#/@").find(c) != std::string::npos) {
            ++pos;
            t.type = Token::Type::Op;
            t.text = std::string(1, c);
            if (c == '@') t.text = "(x)";
            return t;
        }
        throw ParseError(line, t.col, std::string("unexpected character '") + c + "'");
    }

private:
    const std::string& src;
    size_t pos = 0;
    int line;
};

} // namespace detail

/*
 * expr   := tensor { (+|-) tensor }
 * tensor := product { ("(x)" | "#") product }
 * product:= power { "*" power } | "-" product
 * power  := atom [ "^" integer ]
 * atom   := number [ "/" number ] | ident | "(" expr ")" | "d/" ident
 */
class ExpressionParser {
public:
    ExpressionParser(const std::string& text, const ElementScope& scope, int line = 1)
        : lex(text, line), scope(scope), line(line) {
        advance();
    }

    Value parse() {
        Value v = parse_expr();
        if (cur.type != detail::Token::Type::End)
            throw ParseError(line, cur.col, "trailing input after expression");
        return v;
    }

private:
    detail::Lexer lex;
    detail::Token cur;
    const ElementScope& scope;
    int line;

    void advance() { cur = lex.next(); }
    bool is_op(const char* s) const {
        return cur.type == detail::Token::Type::Op && cur.text == s;
    }

    [[noreturn]] void err(const std::string& m) const { throw ParseError(line, cur.col, m); }

    Value parse_expr() {
        Value v = parse_tensor();
        while (is_op("+") || is_op("-")) {
            bool minus = cur.text == "-";
            advance();
            Value w = parse_tensor();
            if (minus) w = negate(w);
            v = add(v, w);
        }
        return v;
    }

    Value parse_tensor() {
        Value v = parse_product();
        while (is_op("(x)") || is_op("#")) {
            bool crossed = cur.text == "#";
            int col = cur.col;
            advance();
            Value w = parse_product();
            v = crossed ? make_crossed(v, w, col) : make_tensor(v, w, col);
        }
        return v;
    }

    Value parse_product() {
        if (is_op("-")) {
            advance();
            return negate(parse_product());
        }
        Value v = parse_power();
        while (is_op("*")) {
            advance();
            v = mul(v, parse_power());
        }
        return v;
    }

    Value parse_power() {
        Value v = parse_atom();
        if (is_op("^")) {
            advance();
            if (cur.type != detail::Token::Type::Number || denominator(cur.num) != 1)
                err("exponent must be a nonnegative integer");
            Integer n = numerator(cur.num);
            advance();
            Value out = v; // n >= 1; n == 0 handled below
            if (n == 0) return Value::scalar(Poly::constant(scope.nvars, 1));
            for (Integer i = 1; i < n; ++i) out = mul(out, v);
            return out;
        }
        return v;
    }

    Value parse_atom() {
        if (cur.type == detail::Token::Type::Number) {
            Rational r = cur.num;
            advance();
            if (is_op("/")) {
                advance();
                if (cur.type != detail::Token::Type::Number) err("expected denominator");
                if (cur.num == 0) err("division by zero");
                r /= cur.num;
                advance();
            }
            return Value::scalar(Poly::constant(scope.nvars, r));
        }
        if (cur.type == detail::Token::Type::Deriv) {
            int vi = scope.var_index(cur.text);
            if (vi < 0) err("unknown variable in derivative: " + cur.text);
            advance();
            return Value::derivation(Derivation::coordinate(scope.nvars, vi));
        }
        if (cur.type == detail::Token::Type::Ident) {
            std::string name = cur.text;
            int col = cur.col;
            advance();
            int vi = scope.var_index(name);
            if (vi >= 0) return Value::scalar(Poly::variable(scope.nvars, vi));
            int gi = scope.gen_index(scope.primary, name);
            if (gi >= 0) return Value::element(UEAElement::generator(scope.primary, gi));
            gi = scope.gen_index(scope.partner, name);
            if (gi >= 0) return Value::element(UEAElement::generator(scope.partner, gi));
            throw ParseError(line, col, "unknown symbol: " + name);
        }
        if (is_op("(")) {
            advance();
            Value v = parse_expr();
            if (!is_op(")")) err("expected ')'");
            advance();
            return v;
        }
        err("expected an expression atom");
    }

    Value promote(const Value& v) const {
        // Scalar -> Elem in the primary context when mixed with elements.
        if (v.kind == Value::Kind::Scalar && scope.primary)
            return Value::element(UEAElement::from_poly(scope.primary, v.poly));
        return v;
    }

    Value negate(const Value& v) const {
        switch (v.kind) {
        case Value::Kind::Scalar: return Value::scalar(Rational(-1) * v.poly);
        case Value::Kind::Elem: return Value::element(Rational(-1) * v.elem);
        case Value::Kind::Tensor: {
            TensorElement t = v.tensor;
            TensorElement z(t.mode, t.left_ctx, t.right_ctx);
            z -= t;
            return Value::tensor_of(z);
        }
        case Value::Kind::Crossed: {
            CrossedElement c(v.crossed.ctx);
            c -= v.crossed;
            return Value::crossed_of(c);
        }
        case Value::Kind::Deriv:
            return Value::derivation(Poly::constant(v.deriv.nvars, -1) * v.deriv);
        }
        throw std::logic_error("negate: bad kind");
    }

    Value add(Value a, Value b) {
        if (a.kind == Value::Kind::Deriv || b.kind == Value::Kind::Deriv) {
            if (a.kind != b.kind) {
                // A zero scalar may absorb into a derivation.
                if (a.kind == Value::Kind::Scalar && a.poly.is_zero()) return b;
                if (b.kind == Value::Kind::Scalar && b.poly.is_zero()) return a;
                err("cannot add a derivation to a non-derivation");
            }
            return Value::derivation(a.deriv + b.deriv);
        }
        if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar)
            return Value::scalar(a.poly + b.poly);
        if (a.kind == Value::Kind::Tensor || b.kind == Value::Kind::Tensor) {
            if (a.kind != b.kind) err("cannot add a tensor to a non-tensor");
            TensorElement t = a.tensor;
            t += b.tensor;
            return Value::tensor_of(t);
        }
        if (a.kind == Value::Kind::Crossed || b.kind == Value::Kind::Crossed) {
            if (a.kind != b.kind) err("cannot add a crossed element to a non-crossed element");
            CrossedElement c = a.crossed;
            c += b.crossed;
            return Value::crossed_of(c);
        }
        a = promote(a);
        b = promote(b);
        if (a.elem.ctx != b.elem.ctx) err("cannot add elements of different algebras");
        return Value::element(a.elem + b.elem);
    }

    Value mul(Value a, Value b) {
        if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar)
            return Value::scalar(a.poly * b.poly);
        if (a.kind == Value::Kind::Deriv || b.kind == Value::Kind::Deriv) {
            if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Deriv)
                return Value::derivation(a.poly * b.deriv);
            err("derivations may only be multiplied by scalars on the left");
        }
        if (a.kind == Value::Kind::Tensor || b.kind == Value::Kind::Tensor) {
            if (a.kind != b.kind) err("tensor products multiply componentwise only");
            return Value::tensor_of(tensor_mul(a.tensor, b.tensor));
        }
        if (a.kind == Value::Kind::Crossed || b.kind == Value::Kind::Crossed) {
            if (a.kind == Value::Kind::Scalar) {
                CrossedElement c(b.crossed.ctx);
                for (auto& [k, p] : b.crossed.terms) c.add_term(k.first, k.second, a.poly * p);
                return Value::crossed_of(c);
            }
            if (a.kind != b.kind) err("cannot mix crossed and plain elements in a product");
            return Value::crossed_of(crossed_mul(a.crossed, b.crossed));
        }
        if (a.kind == Value::Kind::Scalar) {
            return Value::element(a.poly * b.elem);
        }
        if (b.kind == Value::Kind::Scalar)
            return Value::element(uea_mul(a.elem, UEAElement::from_poly(a.elem.ctx, b.poly)));
        if (a.elem.ctx != b.elem.ctx) err("cannot multiply elements of different algebras");
        return Value::element(uea_mul(a.elem, b.elem));
    }

    Value make_tensor(Value a, Value b, int col) {
        a = promote(a);
        b = promote(b);
        if (a.kind != Value::Kind::Elem || b.kind != Value::Kind::Elem)
            throw ParseError(line, col, "tensor marker needs algebra elements on both sides");
        TensorElement t(TensorMode::Plain, a.elem.ctx, b.elem.ctx);
        t.add_product(a.elem, b.elem, 1);
        return Value::tensor_of(t);
    }

    Value make_crossed(Value a, Value b, int col) {
        if (!scope.crossed)
            throw ParseError(line, col, "crossed marker used outside a crossed-product context");
        a = promote(a);
        if (b.kind == Value::Kind::Scalar)
            b = Value::element(UEAElement::from_poly(scope.partner, b.poly));
        if (a.kind != Value::Kind::Elem || b.kind != Value::Kind::Elem)
            throw ParseError(line, col, "crossed marker needs algebra elements on both sides");
        CrossedElement c(scope.crossed);
        c.add_pair(a.elem, b.elem);
        return Value::crossed_of(c);
    }
};

inline Value parse_element(const std::string& text, const ElementScope& scope) {
    return ExpressionParser(text, scope).parse();
}

// Canonical print of a plain or balanced tensor.
inline std::string tensor_str(const TensorElement& t) {
    if (t.terms.empty()) return "0";
    auto slot_str = [](const CtxPtr& c, const TensorSlot& s) {
        UEAElement e(c);
        e.add_term(s.second, Poly::monomial(c->nvars(), s.first, 1));
        return e.str();
    };
    std::string out;
    for (auto& [k, c] : t.terms) {
        std::string ls = slot_str(t.left_ctx, k.first);
        std::string rs = slot_str(t.right_ctx, k.second);
        Rational a = c;
        std::string piece;
        if (a != 1) {
            if (a == -1)
                piece = "-";
            else
                piece = to_string(a) + "*";
        }
        bool lpar = ls.find(' ') != std::string::npos;
        bool rpar = rs.find(' ') != std::string::npos;
        piece += (lpar ? "(" + ls + ")" : ls);
        piece += " (x) ";
        piece += (rpar ? "(" + rs + ")" : rs);
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Definition documents
// ---------------------------------------------------------------------------

struct DefinitionDocument {
    std::vector<std::string> base_vars;

    struct AlgebraEntry {
        std::string name;
        std::shared_ptr<LieRinehartAlgebra> algebra;
        CtxPtr ctx;
    };
    struct MorphismEntry {
        std::string name, source, target;
        LRAMorphism morphism;
    };
    struct SectionEntry {
        std::string name, pi, gamma, kind;
        std::vector<std::string> order_labels;
        CoringSection section;
    };
    struct TauEntry {
        std::string algebra;
        std::vector<std::vector<Poly>> table;
    };

    std::vector<AlgebraEntry> algebras;
    std::vector<MorphismEntry> morphisms;
    std::vector<SectionEntry> sections;
    std::map<std::string, std::vector<int>> kernels; // morphism -> n-generator indices
    std::map<std::string, TauEntry> taus;            // algebra -> tau table

    const AlgebraEntry* find_algebra(const std::string& n) const {
        for (auto& a : algebras)
            if (a.name == n) return &a;
        return nullptr;
    }
    const MorphismEntry* find_morphism(const std::string& n) const {
        for (auto& m : morphisms)
            if (m.name == n) return &m;
        return nullptr;
    }
    const SectionEntry* find_section(const std::string& n) const {
        for (auto& s : sections)
            if (s.name == n) return &s;
        return nullptr;
    }
};

namespace detail {

// Whitespace tokenizer for definition lines that keeps bracket punctuation
// as separate tokens and records columns.
inline std::vector<std::pair<std::string, int>> def_tokens(const std::string& line) {
    std::vector<std::pair<std::string, int>> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break; // comment
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        if (std::string("[],:").find(c) != std::string::npos) {
            out.emplace_back(std::string(1, c), (int)i + 1);
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.emplace_back("->", (int)i + 1);
            i += 2;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace((unsigned char)line[i]) &&
               std::string("[],:#").find(line[i]) == std::string::npos &&
               !(line[i] == '-' && i + 1 < line.size() && line[i + 1] == '>'))
            ++i;
        out.emplace_back(line.substr(start, i - start), (int)start + 1);
    }
    return out;
}

} // namespace detail

/*
 * Parse a full definition document.  The parser runs in two passes: a
 * line-by-line collection pass raising the first syntax/reference error, and
 * a finalization pass constructing morphisms and (certified) sections.
 */
inline DefinitionDocument parse_definition(const std::string& text) {
    DefinitionDocument doc;
    struct PendingMap {
        std::string morphism;
        int gen;
        std::string rhs;
        int line;
    };
    struct PendingSection {
        std::string name, pi, gamma, kind;
        std::vector<std::string> order_labels;
        int line;
    };
    std::vector<PendingSection> pending_sections;
    struct MorStub {
        std::string name, source, target;
        std::vector<ModuleVec> matrix;
        int line;
    };
    std::vector<MorStub> mor_stubs;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_algebra = false;

    auto module_scope = [&](const DefinitionDocument::AlgebraEntry& a) {
        return scope_for_context(a.ctx);
    };
    // Parse a module expression (A-linear combination of generators) into a
    // coefficient vector over the algebra's basis.
    auto parse_modexpr = [&](const DefinitionDocument::AlgebraEntry& a, const std::string& rhs,
                             int line) {
        ElementScope sc = module_scope(a);
        Value v = ExpressionParser(rhs, sc, line).parse();
        ModuleVec out(a.algebra->rank, Poly(a.algebra->nvars));
        if (v.kind == Value::Kind::Scalar) {
            if (!v.poly.is_zero()) throw ParseError(line, 1, "module expression has a scalar part");
            return out;
        }
        if (v.kind != Value::Kind::Elem)
            throw ParseError(line, 1, "expected an A-linear combination of generators");
        for (auto& [m, p] : v.elem.terms) {
            if (m.size() != 1)
                throw ParseError(line, 1, "module expression must be linear in the generators");
            out[m[0]] += p;
        }
        return out;
    };
    auto find_alg = [&](const std::string& n, int line,
                        int col) -> DefinitionDocument::AlgebraEntry& {
        for (auto& a : doc.algebras)
            if (a.name == n) return a;
        throw ParseError(line, col, "unknown algebra: " + n);
    };
    auto gen_of = [&](const DefinitionDocument::AlgebraEntry& a, const std::string& label,
                      int line, int col) {
        for (int i = 0; i < a.algebra->rank; ++i)
            if (a.algebra->labels[i] == label) return i;
        throw ParseError(line, col, "unknown generator '" + label + "' in algebra " + a.name);
    };

    std::vector<PendingMap> pending_maps;

    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = detail::def_tokens(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].first;
        auto need = [&](size_t i) -> const std::pair<std::string, int>& {
            if (i >= toks.size())
                throw ParseError(lineno, (int)raw.size() + 1, "unexpected end of line");
            return toks[i];
        };
        auto rest_of_line = [&](size_t from_tok) {
            if (from_tok >= toks.size()) return std::string();
            size_t col = (size_t)toks[from_tok].second - 1;
            std::string r = raw.substr(col);
            size_t h = r.find('#');
            if (h != std::string::npos) r = r.substr(0, h);
            return r;
        };

        if (kw == "base") {
            if (saw_algebra)
                throw ParseError(lineno, toks[0].second, "base must precede all algebras");
            doc.base_vars.clear();
            for (size_t i = 1; i < toks.size(); ++i) doc.base_vars.push_back(toks[i].first);
        } else if (kw == "algebra") {
            saw_algebra = true;
            std::string name = need(1).first;
            if (doc.find_algebra(name))
                throw ParseError(lineno, toks[1].second, "duplicate algebra name: " + name);
            std::vector<std::string> labels;
            for (size_t i = 2; i < toks.size(); ++i) labels.push_back(toks[i].first);
            if (labels.empty())
                throw ParseError(lineno, toks[0].second, "algebra needs at least one generator");
            auto alg =
                std::make_shared<LieRinehartAlgebra>((int)doc.base_vars.size(), labels);
            alg->var_names = doc.base_vars;
            DefinitionDocument::AlgebraEntry e;
            e.name = name;
            e.algebra = alg;
            e.ctx = make_context(alg);
            doc.algebras.push_back(std::move(e));
        } else if (kw == "bracket") {
            // bracket ALG [ G1 , G2 ] = modexpr
            auto& a = find_alg(need(1).first, lineno, need(1).second);
            if (need(2).first != "[") throw ParseError(lineno, need(2).second, "expected '['");
            int g1 = gen_of(a, need(3).first, lineno, need(3).second);
            if (need(4).first != ",") throw ParseError(lineno, need(4).second, "expected ','");
            int g2 = gen_of(a, need(5).first, lineno, need(5).second);
            if (need(6).first != "]") throw ParseError(lineno, need(6).second, "expected ']'");
            if (need(7).first != "=") throw ParseError(lineno, need(7).second, "expected '='");
            a.algebra->set_bracket(g1, g2, parse_modexpr(a, rest_of_line(8), lineno));
        } else if (kw == "anchor") {
            // anchor ALG G = derexpr
            auto& a = find_alg(need(1).first, lineno, need(1).second);
            int g = gen_of(a, need(2).first, lineno, need(2).second);
            if (need(3).first != "=") throw ParseError(lineno, need(3).second, "expected '='");
            ElementScope sc = module_scope(a);
            Value v = ExpressionParser(rest_of_line(4), sc, lineno).parse();
            if (v.kind == Value::Kind::Scalar && v.poly.is_zero()) {
                a.algebra->set_anchor(g, Derivation(a.algebra->nvars));
            } else if (v.kind == Value::Kind::Deriv) {
                a.algebra->set_anchor(g, v.deriv);
            } else {
                throw ParseError(lineno, need(3).second, "anchor must be a derivation or 0");
            }
        } else if (kw == "morphism") {
            // morphism NAME : SRC -> TGT
            std::string name = need(1).first;
            for (auto& s : mor_stubs)
                if (s.name == name)
                    throw ParseError(lineno, toks[1].second, "duplicate morphism name: " + name);
            if (need(2).first != ":") throw ParseError(lineno, need(2).second, "expected ':'");
            auto& src = find_alg(need(3).first, lineno, need(3).second);
            if (need(4).first != "->") throw ParseError(lineno, need(4).second, "expected '->'");
            auto& tgt = find_alg(need(5).first, lineno, need(5).second);
            MorStub s;
            s.name = name;
            s.source = src.name;
            s.target = tgt.name;
            s.matrix.assign(src.algebra->rank,
                            ModuleVec(tgt.algebra->rank, Poly(tgt.algebra->nvars)));
            s.line = lineno;
            mor_stubs.push_back(std::move(s));
        } else if (kw == "map") {
            // map MOR G = modexpr   (in the target algebra)
            std::string mor = need(1).first;
            MorStub* stub = nullptr;
            for (auto& s : mor_stubs)
                if (s.name == mor) stub = &s;
            if (!stub) throw ParseError(lineno, toks[1].second, "unknown morphism: " + mor);
            auto& src = find_alg(stub->source, lineno, toks[1].second);
            auto& tgt = find_alg(stub->target, lineno, toks[1].second);
            int g = gen_of(src, need(2).first, lineno, need(2).second);
            if (need(3).first != "=") throw ParseError(lineno, need(3).second, "expected '='");
            stub->matrix[g] = parse_modexpr(tgt, rest_of_line(4), lineno);
        } else if (kw == "kernel") {
            // kernel MOR = G1 G2 ...
            std::string mor = need(1).first;
            MorStub* stub = nullptr;
            for (auto& s : mor_stubs)
                if (s.name == mor) stub = &s;
            if (!stub) throw ParseError(lineno, toks[1].second, "unknown morphism: " + mor);
            if (need(2).first != "=") throw ParseError(lineno, need(2).second, "expected '='");
            auto& src = find_alg(stub->source, lineno, toks[1].second);
            std::vector<int> gens;
            for (size_t i = 3; i < toks.size(); ++i)
                gens.push_back(gen_of(src, toks[i].first, lineno, toks[i].second));
            doc.kernels[mor] = std::move(gens);
        } else if (kw == "section") {
            // section NAME : PI GAMMA KIND [ORDER...]
            PendingSection s;
            s.name = need(1).first;
            if (need(2).first != ":") throw ParseError(lineno, need(2).second, "expected ':'");
            s.pi = need(3).first;
            s.gamma = need(4).first;
            s.kind = need(5).first;
            if (s.kind != "ordered" && s.kind != "symmetrized" && s.kind != "morphism")
                throw ParseError(lineno, need(5).second,
                                 "section kind must be ordered, symmetrized, or morphism");
            for (size_t i = 6; i < toks.size(); ++i) s.order_labels.push_back(toks[i].first);
            s.line = lineno;
            pending_sections.push_back(std::move(s));
        } else if (kw == "tau") {
            // tau ALG [ G1 , G2 ] = polyexpr
            auto& a = find_alg(need(1).first, lineno, need(1).second);
            if (need(2).first != "[") throw ParseError(lineno, need(2).second, "expected '['");
            int g1 = gen_of(a, need(3).first, lineno, need(3).second);
            if (need(4).first != ",") throw ParseError(lineno, need(4).second, "expected ','");
            int g2 = gen_of(a, need(5).first, lineno, need(5).second);
            if (need(6).first != "]") throw ParseError(lineno, need(6).second, "expected ']'");
            if (need(7).first != "=") throw ParseError(lineno, need(7).second, "expected '='");
            ElementScope sc = module_scope(a);
            Value v = ExpressionParser(rest_of_line(8), sc, lineno).parse();
            if (v.kind != Value::Kind::Scalar)
                throw ParseError(lineno, need(7).second, "tau values must be base-ring scalars");
            auto it = doc.taus.find(a.name);
            if (it == doc.taus.end()) {
                DefinitionDocument::TauEntry te;
                te.algebra = a.name;
                te.table.assign(a.algebra->rank,
                                std::vector<Poly>(a.algebra->rank, Poly(a.algebra->nvars)));
                it = doc.taus.emplace(a.name, std::move(te)).first;
            }
            it->second.table[g1][g2] = v.poly;
            it->second.table[g2][g1] = Rational(-1) * v.poly;
        } else {
            throw ParseError(lineno, toks[0].second, "unknown keyword: " + kw);
        }
    }

    // Finalize morphisms.
    for (auto& s : mor_stubs) {
        DefinitionDocument::MorphismEntry e;
        e.name = s.name;
        e.source = s.source;
        e.target = s.target;
        e.morphism = LRAMorphism(doc.find_algebra(s.source)->algebra,
                                 doc.find_algebra(s.target)->algebra, s.matrix);
        doc.morphisms.push_back(std::move(e));
    }
    // Finalize sections (certification may fail).
    for (auto& s : pending_sections) {
        auto* pi = doc.find_morphism(s.pi);
        auto* ga = doc.find_morphism(s.gamma);
        if (!pi) throw ParseError(s.line, 1, "unknown morphism: " + s.pi);
        if (!ga) throw ParseError(s.line, 1, "unknown morphism: " + s.gamma);
        CoringSection::Kind kind = s.kind == "ordered" ? CoringSection::Kind::Ordered
                                   : s.kind == "symmetrized"
                                       ? CoringSection::Kind::Symmetrized
                                       : CoringSection::Kind::HopfMorphism;
        auto* gsrc = doc.find_algebra(pi->source);
        auto* hsrc = doc.find_algebra(pi->target);
        std::vector<int> order;
        for (auto& l : s.order_labels) {
            int gi = -1;
            for (int i = 0; i < hsrc->algebra->rank; ++i)
                if (hsrc->algebra->labels[i] == l) gi = i;
            if (gi < 0) throw ParseError(s.line, 1, "unknown generator in order: " + l);
            order.push_back(gi);
        }
        DefinitionDocument::SectionEntry e;
        e.name = s.name;
        e.pi = s.pi;
        e.gamma = s.gamma;
        e.kind = s.kind;
        e.order_labels = s.order_labels;
        try {
            e.section =
                coring_section(pi->morphism, ga->morphism, kind, gsrc->ctx, hsrc->ctx, order);
        } catch (const std::exception& ex) {
            throw ParseError(s.line, 1, std::string("section ") + s.name + ": " + ex.what());
        }
        doc.sections.push_back(std::move(e));
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Canonical serialization
// ---------------------------------------------------------------------------

inline std::string print_definition(const DefinitionDocument& doc) {
    std::ostringstream out;
    auto mod_str = [&](const DefinitionDocument::AlgebraEntry& a, const ModuleVec& v) {
        UEAElement e(a.ctx);
        for (int i = 0; i < a.algebra->rank; ++i)
            if (!v[i].is_zero()) e.add_term({i}, v[i]);
        return e.str();
    };
    auto der_str = [&](const Derivation& d) {
        std::string s;
        std::vector<std::string> names = doc.base_vars;
        for (int i = 0; i < d.nvars; ++i) {
            if (d.comps[i].is_zero()) continue;
            std::string c = d.comps[i].str(names);
            std::string piece =
                (c == "1") ? "" : (d.comps[i].terms.size() == 1 ? c : "(" + c + ")") + "*";
            piece += "d/" + names[i];
            if (s.empty())
                s = piece;
            else if (piece[0] == '-')
                s += " - " + piece.substr(1);
            else
                s += " + " + piece;
        }
        return s.empty() ? std::string("0") : s;
    };
    if (!doc.base_vars.empty()) {
        out << "base";
        for (auto& v : doc.base_vars) out << " " << v;
        out << "\n\n";
    }
    for (auto& a : doc.algebras) {
        out << "algebra " << a.name;
        for (auto& l : a.algebra->labels) out << " " << l;
        out << "\n";
        for (int i = 0; i < a.algebra->rank; ++i)
            for (int j = i + 1; j < a.algebra->rank; ++j) {
                bool nz = false;
                for (auto& p : a.algebra->bracket_table[i][j])
                    if (!p.is_zero()) nz = true;
                if (nz)
                    out << "bracket " << a.name << " [" << a.algebra->labels[i] << ", "
                        << a.algebra->labels[j]
                        << "] = " << mod_str(a, a.algebra->bracket_table[i][j]) << "\n";
            }
        for (int i = 0; i < a.algebra->rank; ++i) {
            bool nz = false;
            for (auto& p : a.algebra->anchor_table[i].comps)
                if (!p.is_zero()) nz = true;
            if (nz)
                out << "anchor " << a.name << " " << a.algebra->labels[i] << " = "
                    << der_str(a.algebra->anchor_table[i]) << "\n";
        }
        auto t = doc.taus.find(a.name);
        if (t != doc.taus.end()) {
            std::vector<std::string> names = doc.base_vars;
            for (int i = 0; i < a.algebra->rank; ++i)
                for (int j = i + 1; j < a.algebra->rank; ++j)
                    if (!t->second.table[i][j].is_zero())
                        out << "tau " << a.name << " [" << a.algebra->labels[i] << ", "
                            << a.algebra->labels[j]
                            << "] = " << t->second.table[i][j].str(names) << "\n";
        }
        out << "\n";
    }
    for (auto& m : doc.morphisms) {
        out << "morphism " << m.name << " : " << m.source << " -> " << m.target << "\n";
        auto* src = doc.find_algebra(m.source);
        auto* tgt = doc.find_algebra(m.target);
        for (int i = 0; i < src->algebra->rank; ++i) {
            bool nz = false;
            for (auto& p : m.morphism.matrix[i])
                if (!p.is_zero()) nz = true;
            if (nz)
                out << "map " << m.name << " " << src->algebra->labels[i] << " = "
                    << mod_str(*tgt, m.morphism.matrix[i]) << "\n";
        }
        auto k = doc.kernels.find(m.name);
        if (k != doc.kernels.end()) {
            out << "kernel " << m.name << " =";
            for (int gi : k->second) out << " " << src->algebra->labels[gi];
            out << "\n";
        }
        out << "\n";
    }
    for (auto& s : doc.sections) {
        out << "section " << s.name << " : " << s.pi << " " << s.gamma << " " << s.kind;
        for (auto& l : s.order_labels) out << " " << l;
        out << "\n";
    }
    return out.str();
}

// Build the tau-crossed context declared by a tau table over an algebra
// whose bracket coefficients are rational constants.
inline TauProductResult tau_context_from(const DefinitionDocument& doc,
                                         const std::string& algebra) {
    auto* a = doc.find_algebra(algebra);
    auto t = doc.taus.find(algebra);
    TauProductResult bad;
    if (!a || t == doc.taus.end()) {
        bad.error = "no tau table for algebra " + algebra;
        return bad;
    }
    int m = a->algebra->rank;
    std::vector<std::vector<std::vector<Rational>>> cs(
        m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, 0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const Poly& p = a->algebra->bracket_table[i][j][k];
                if (!p.is_constant()) {
                    bad.error = "tau-crossed products need constant structure coefficients";
                    return bad;
                }
                cs[i][j][k] = p.constant_value();
            }
    std::vector<Derivation> nab;
    for (int i = 0; i < m; ++i) nab.push_back(a->algebra->anchor_table[i]);
    TauProductResult res = make_tau_context(a->algebra->nvars, a->algebra->labels, cs, nab,
                                            t->second.table);
    if (res.ok) res.ctx->r_var_names = doc.base_vars;
    return res;
}

} // namespace lierine
