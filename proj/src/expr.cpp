#include "vocal/expr.hpp"

#include "vocal/ope.hpp"
#include "vocal/w3.hpp"

#include <cctype>
#include <optional>

namespace vocal {

namespace {

struct Token {
    enum class Kind { Number, Ident, Sym, End } kind;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    bool isSym(char c) const { return tok_.kind == Token::Kind::Sym && tok_.text[0] == c; }
    bool isIdent(const char* s) const { return tok_.kind == Token::Kind::Ident && tok_.text == s; }

    struct Pos {
        size_t i;
        int line, col;
        Token tok;
    };
    Pos save() const { return {i_, line_, col_, tok_}; }
    void restore(const Pos& p) {
        i_ = p.i;
        line_ = p.line;
        col_ = p.col;
        tok_ = p.tok;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) {
            if (text_[i_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++i_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= text_.size()) {
            tok_ = {Token::Kind::End, "", line_, col_};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            tok_ = {Token::Kind::Number, text_.substr(i_, j - i_), line_, col_};
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::Ident, text_.substr(i_, j - i_), line_, col_};
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        tok_ = {Token::Kind::Sym, std::string(1, c), line_, col_};
        ++col_;
        ++i_;
    }

    const std::string& text_;
    size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.col, message);
}

class Parser {
public:
    Parser(const std::string& text, ExprMode mode) : lex_(text), mode_(mode) {}

    Expr parseAll() {
        Expr e = mode_ == ExprMode::State ? parseCirc() : parseSum();
        if (lex_.peek().kind != Token::Kind::End) fail(lex_.peek(), "unexpected trailing input");
        return e;
    }

private:
    Expr at(ExprKind kind, const Token& t) {
        Expr e;
        e.kind = kind;
        e.line = t.line;
        e.col = t.col;
        return e;
    }

    long parseSignedInt() {
        bool neg = false;
        if (lex_.isSym('-')) {
            lex_.next();
            neg = true;
        }
        Token t = lex_.peek();
        if (t.kind != Token::Kind::Number) fail(t, "expected an integer");
        lex_.next();
        long v = std::stol(t.text);
        return neg ? -v : v;
    }

    // circ has the lowest precedence and associates to the left.
    Expr parseCirc() {
        Expr lhs = parseSum();
        while (lex_.isIdent("circ")) {
            Token t = lex_.next();
            long n = parseSignedInt();
            Expr rhs = parseSum();
            Expr node = at(ExprKind::Circle, t);
            node.args = {n};
            node.children = {std::move(lhs), std::move(rhs)};
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr parseSum() {
        Token start = lex_.peek();
        Expr first = parseTerm();
        if (!lex_.isSym('+') && !lex_.isSym('-')) return first;
        Expr node = at(ExprKind::Sum, start);
        node.args.push_back(1);
        node.children.push_back(std::move(first));
        while (lex_.isSym('+') || lex_.isSym('-')) {
            node.args.push_back(lex_.next().text[0] == '+' ? 1 : -1);
            node.children.push_back(parseTerm());
        }
        return node;
    }

    bool startsScalar() const {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) return true;
        if (t.kind == Token::Kind::Ident && t.text == "sqrt6") return true;
        if (t.kind == Token::Kind::Sym && t.text[0] == '-') return true;
        return false;
    }

    Expr parseTerm() {
        if (startsScalar()) {
            Token t = lex_.peek();
            Scalar s = parseScalar();
            if (lex_.isSym('*')) {
                lex_.next();
                Expr node = at(ExprKind::ScalarMul, t);
                node.scalar = s;
                node.children.push_back(parseFactor());
                return node;
            }
            Expr node = at(ExprKind::ScalarLit, t);
            node.scalar = s;
            return node;
        }
        return parseFactor();
    }

    // One component: [-] rat ['*'? sqrt6] | [-] sqrt6. Sets sawSurd.
    Scalar parseScalarComponent(bool leadingSignAllowed, bool& sawSurd) {
        bool neg = false;
        if (leadingSignAllowed && lex_.isSym('-')) {
            lex_.next();
            neg = true;
        }
        Rat r;
        if (lex_.peek().kind == Token::Kind::Number) {
            Int num(lex_.next().text);
            Int den = 1;
            if (lex_.isSym('/')) {
                lex_.next();
                Token d = lex_.peek();
                if (d.kind != Token::Kind::Number) fail(d, "expected a denominator");
                lex_.next();
                den = Int(d.text);
                if (den == 0) fail(d, "zero denominator");
            }
            r = Rat(num, den);
            sawSurd = false;
            auto mark = lex_.save();
            if (lex_.isSym('*')) {
                lex_.next();
                if (lex_.isIdent("sqrt6")) {
                    lex_.next();
                    sawSurd = true;
                } else {
                    lex_.restore(mark);  // '*' belongs to the enclosing term
                }
            } else if (lex_.isIdent("sqrt6")) {
                lex_.next();
                sawSurd = true;
            }
        } else if (lex_.isIdent("sqrt6")) {
            lex_.next();
            r = 1;
            sawSurd = true;
        } else {
            fail(lex_.peek(), "expected a scalar");
        }
        if (neg) r = -r;
        return sawSurd ? Scalar(Rat(0), r) : Scalar(r);
    }

    Scalar parseScalar() {
        bool surd1 = false;
        Scalar s = parseScalarComponent(true, surd1);
        if (!surd1 && (lex_.isSym('+') || lex_.isSym('-'))) {
            // A second component is part of the scalar only when it carries
            // sqrt6; otherwise the sign separates sum terms.
            auto mark = lex_.save();
            bool neg = lex_.next().text[0] == '-';
            bool surd2 = false;
            bool ok = true;
            Scalar s2;
            try {
                s2 = parseScalarComponent(false, surd2);
            } catch (const ParseError&) {
                ok = false;
            }
            if (ok && surd2) {
                s += neg ? -s2 : s2;
            } else {
                lex_.restore(mark);
            }
        }
        return s;
    }

    Expr parseFactor() {
        if (mode_ != ExprMode::State) return parseVarProduct();
        Token t = lex_.peek();
        if (lex_.isSym(':')) {
            lex_.next();
            Expr node = at(ExprKind::Wick, t);
            // ':' closes once two or more factors are in; before that it opens
            // a nested product. Parenthesize to nest after the second slot.
            while (true) {
                if (lex_.isSym(':') && node.children.size() >= 2) {
                    lex_.next();
                    break;
                }
                if (lex_.peek().kind == Token::Kind::End) fail(lex_.peek(), "unterminated ':'");
                node.children.push_back(parseFactor());
            }
            return node;
        }
        if (lex_.isSym('(')) {
            lex_.next();
            Expr inner = mode_ == ExprMode::State ? parseCirc() : parseSum();
            if (!lex_.isSym(')')) fail(lex_.peek(), "expected ')'");
            lex_.next();
            return inner;
        }
        if (t.kind == Token::Kind::Ident && t.text == "D") {
            lex_.next();
            if (!lex_.isSym('^')) fail(lex_.peek(), "expected '^' after D");
            lex_.next();
            Token n = lex_.peek();
            if (n.kind != Token::Kind::Number) fail(n, "expected a derivative order");
            lex_.next();
            Expr node = at(ExprKind::Deriv, t);
            node.args = {std::stol(n.text)};
            node.children.push_back(parseFactor());
            return node;
        }
        if (t.kind == Token::Kind::Ident) {
            lex_.next();
            static const char* builtins[] = {"L_S", "W_S", "L_H", "W_H", "L_E",
                                             "W_E", "theta", "phi", "omega", "Lalpha"};
            bool isBuiltin = false;
            for (const char* b : builtins) isBuiltin |= t.text == b;
            if (isBuiltin) {
                Expr node = at(ExprKind::Builtin, t);
                node.name = t.text;
                if (lex_.isSym('[')) {
                    lex_.next();
                    node.args.push_back(parseSignedInt());
                    while (lex_.isSym(',')) {
                        lex_.next();
                        node.args.push_back(parseSignedInt());
                    }
                    if (!lex_.isSym(']')) fail(lex_.peek(), "expected ']'");
                    lex_.next();
                }
                return node;
            }
            Expr node = at(ExprKind::Gen, t);
            node.name = t.text;
            return node;
        }
        fail(t, "expected a factor");
    }

    // Weyl/poly mode: juxtaposed variables with optional powers.
    Expr parseVarProduct() {
        Token start = lex_.peek();
        if (lex_.isSym('(')) {
            lex_.next();
            Expr inner = parseSum();
            if (!lex_.isSym(')')) fail(lex_.peek(), "expected ')'");
            lex_.next();
            return inner;
        }
        Expr node = at(ExprKind::Product, start);
        while (lex_.peek().kind == Token::Kind::Ident) {
            Token v = lex_.next();
            Expr var = at(ExprKind::VarPow, v);
            var.name = v.text;
            long pow = 1;
            if (lex_.isSym('^')) {
                lex_.next();
                Token p = lex_.peek();
                if (p.kind != Token::Kind::Number) fail(p, "expected an exponent");
                lex_.next();
                pow = std::stol(p.text);
            }
            var.args = {pow};
            node.children.push_back(std::move(var));
        }
        if (node.children.empty()) fail(start, "expected a variable");
        return node;
    }

    Lexer lex_;
    ExprMode mode_;
};

std::vector<Scalar> effectiveAlpha(const FreeAlgebraSpec& alg, const ElabContext& ctx) {
    size_t need = static_cast<size_t>(alg.bgPairs() + alg.bcPairs());
    if (!ctx.alpha.empty()) {
        if (ctx.alpha.size() != need)
            throw std::invalid_argument("alpha length must match the pair count");
        return ctx.alpha;
    }
    return std::vector<Scalar>(need, Scalar(Rat(1, 2)));
}

}  // namespace

Expr parseExpr(const std::string& text, ExprMode mode) {
    return Parser(text, mode).parseAll();
}

State elaborateState(const Expr& e, const ElabContext& ctx) {
    if (!ctx.algebra) throw std::invalid_argument("no algebra in elaboration context");
    const FreeAlgebraSpec& alg = *ctx.algebra;
    switch (e.kind) {
        case ExprKind::ScalarLit:
            return e.scalar * State::vacuum(alg);
        case ExprKind::Gen: {
            auto g = alg.genByName(e.name);
            if (!g) throw ParseError(e.line, e.col, "unknown generator '" + e.name + "'");
            return State::generator(alg, *g);
        }
        case ExprKind::Deriv:
            return deriveN(elaborateState(e.children[0], ctx), static_cast<int>(e.args[0]));
        case ExprKind::Wick: {
            State acc = elaborateState(e.children.back(), ctx);
            for (size_t i = e.children.size() - 1; i-- > 0;)
                acc = wick(elaborateState(e.children[i], ctx), acc);
            return acc;
        }
        case ExprKind::Sum: {
            State acc(alg);
            for (size_t i = 0; i < e.children.size(); ++i) {
                State t = elaborateState(e.children[i], ctx);
                if (e.args[i] > 0)
                    acc += t;
                else
                    acc -= t;
            }
            return acc;
        }
        case ExprKind::ScalarMul:
            return e.scalar * elaborateState(e.children[0], ctx);
        case ExprKind::Circle:
            return circle(elaborateState(e.children[0], ctx), elaborateState(e.children[1], ctx),
                          e.args[0]);
        case ExprKind::Builtin: {
            auto pairArg = [&](int count, const char* what) {
                if (e.args.size() != 1 || e.args[0] < 1 || e.args[0] > count)
                    throw ParseError(e.line, e.col,
                                     std::string(what) + " index out of range for this algebra");
                return static_cast<int>(e.args[0]) - 1;
            };
            if (e.name == "L_S") return buildLSWS(alg, pairArg(alg.bgPairs(), "L_S")).first;
            if (e.name == "W_S") return buildLSWS(alg, pairArg(alg.bgPairs(), "W_S")).second;
            if (e.name == "L_H" || e.name == "W_H") {
                if (alg.heisCount() == 0)
                    throw ParseError(e.line, e.col, "algebra has no Heisenberg current");
                auto lw = buildHeisLW(alg, 0);
                return e.name == "L_H" ? lw.first : lw.second;
            }
            if (e.name == "L_E" || e.name == "W_E") {
                if (alg.bcPairs() == 0) throw ParseError(e.line, e.col, "algebra has no bc pair");
                auto lw = buildBcLW(alg, 0);
                return e.name == "L_E" ? lw.first : lw.second;
            }
            if (e.name == "Lalpha") {
                auto alpha = effectiveAlpha(alg, ctx);
                return virasoroAlpha(alg, alpha);
            }
            if (e.name == "theta" || e.name == "phi") {
                if (!ctx.action)
                    throw ParseError(e.line, e.col, "'" + e.name + "' needs an action context");
                if (e.name == "theta")
                    return buildTheta(*ctx.action, pairArg(ctx.action->m(), "theta"));
                auto kernel = fieldKernelBasis(ctx.action->matrix);
                int i = static_cast<int>(e.args.size() == 1 ? e.args[0] : 0);
                if (i < 1 || i > static_cast<int>(kernel.size()))
                    throw ParseError(e.line, e.col, "phi index out of range");
                return buildPhi(*ctx.action, kernel[i - 1]);
            }
            if (e.name == "omega") {
                if (static_cast<int>(e.args.size()) != alg.bgPairs())
                    throw ParseError(e.line, e.col, "omega needs one index per βγ pair");
                return buildOmega(alg, e.args);
            }
            throw ParseError(e.line, e.col, "unknown builtin '" + e.name + "'");
        }
        default:
            throw ParseError(e.line, e.col, "expression form not valid in state mode");
    }
}

namespace {

std::optional<std::pair<char, int>> splitVar(const std::string& name, bool poly) {
    size_t p = 0;
    char kind;
    if (poly) {
        if (name.size() >= 3 && name[0] == 'x' && name[1] == 'p') {
            kind = 'p';
            p = 2;
        } else if (name.size() >= 2 && name[0] == 'x') {
            kind = 'x';
            p = 1;
        } else {
            return std::nullopt;
        }
    } else {
        if (name.size() < 2) return std::nullopt;
        kind = name[0];
        if (kind != 'x' && kind != 'd' && kind != 'e') return std::nullopt;
        p = 1;
    }
    int idx = 0;
    for (size_t i = p; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        idx = idx * 10 + (name[i] - '0');
    }
    if (idx < 1) return std::nullopt;
    return std::make_pair(kind, idx - 1);
}

}  // namespace

WeylElement elaborateWeyl(const Expr& e, int n) {
    switch (e.kind) {
        case ExprKind::ScalarLit:
            return e.scalar * WeylElement::unit(n);
        case ExprKind::Sum: {
            WeylElement acc(n);
            for (size_t i = 0; i < e.children.size(); ++i) {
                WeylElement t = elaborateWeyl(e.children[i], n);
                if (e.args[i] > 0)
                    acc += t;
                else
                    acc -= t;
            }
            return acc;
        }
        case ExprKind::ScalarMul:
            return e.scalar * elaborateWeyl(e.children[0], n);
        case ExprKind::Product: {
            WeylElement acc = WeylElement::unit(n);
            for (const Expr& child : e.children) acc = acc * elaborateWeyl(child, n);
            return acc;
        }
        case ExprKind::VarPow: {
            auto v = splitVar(e.name, false);
            if (!v || v->second >= n)
                throw ParseError(e.line, e.col, "unknown variable '" + e.name + "'");
            WeylElement base = v->first == 'x'   ? WeylElement::position(n, v->second)
                               : v->first == 'd' ? WeylElement::derivative(n, v->second)
                                                 : WeylElement::euler(n, v->second);
            WeylElement acc = WeylElement::unit(n);
            for (long i = 0; i < e.args[0]; ++i) acc = acc * base;
            return acc;
        }
        default:
            throw ParseError(e.line, e.col, "expression form not valid in weyl mode");
    }
}

MultiPoly elaboratePoly(const Expr& e, int n) {
    switch (e.kind) {
        case ExprKind::ScalarLit:
            return MultiPoly::constant(2 * n, e.scalar);
        case ExprKind::Sum: {
            MultiPoly acc(2 * n);
            for (size_t i = 0; i < e.children.size(); ++i) {
                MultiPoly t = elaboratePoly(e.children[i], n);
                if (e.args[i] > 0)
                    acc += t;
                else
                    acc -= t;
            }
            return acc;
        }
        case ExprKind::ScalarMul:
            return e.scalar * elaboratePoly(e.children[0], n);
        case ExprKind::Product: {
            MultiPoly acc = MultiPoly::constant(2 * n, Scalar(1));
            for (const Expr& child : e.children) acc = acc * elaboratePoly(child, n);
            return acc;
        }
        case ExprKind::VarPow: {
            auto v = splitVar(e.name, true);
            if (!v || v->second >= n)
                throw ParseError(e.line, e.col, "unknown variable '" + e.name + "'");
            int var = v->first == 'x' ? v->second : n + v->second;
            return MultiPoly::variable(2 * n, var, static_cast<int>(e.args[0]));
        }
        default:
            throw ParseError(e.line, e.col, "expression form not valid in poly mode");
    }
}

State parseState(const std::string& text, const ElabContext& ctx) {
    return elaborateState(parseExpr(text, ExprMode::State), ctx);
}

WeylElement parseWeylElement(const std::string& text, int n) {
    return elaborateWeyl(parseExpr(text, ExprMode::Weyl), n);
}

MultiPoly parsePolyElement(const std::string& text, int n) {
    return elaboratePoly(parseExpr(text, ExprMode::Poly), n);
}

Scalar parseScalarLiteral(const std::string& text) {
    Expr e = parseExpr(text, ExprMode::State);
    if (e.kind != ExprKind::ScalarLit) throw ParseError(e.line, e.col, "expected a scalar literal");
    return e.scalar;
}

namespace {

// Shared sum printer: pieces are (sign, body) with positive bodies.
std::string joinSigned(const std::vector<std::pair<int, std::string>>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0) {
            if (pieces[i].first < 0) out += "-";
            out += pieces[i].second;
        } else {
            out += pieces[i].first < 0 ? " - " : " + ";
            out += pieces[i].second;
        }
    }
    return out;
}

// Body for coeff·monomial with |coeff| folded in; sign returned separately.
std::pair<int, std::string> coeffBody(const Scalar& coeff, const std::string& mono,
                                      bool firstNegativeNeedsNumber) {
    int sign = coeff.sign();
    Scalar abs = sign < 0 ? -coeff : coeff;
    if (mono.empty()) return {sign, abs.str()};
    if (abs.isOne() && !(sign < 0 && firstNegativeNeedsNumber)) return {sign, mono};
    return {sign, abs.str() + "*" + mono};
}

}  // namespace

std::string printState(const State& s) {
    if (s.isZero()) return "0";
    const FreeAlgebraSpec& alg = *s.algebra();
    std::vector<std::pair<int, std::string>> pieces;
    bool first = true;
    for (const auto& [mono, coeff] : s.terms()) {
        std::string m;
        if (!mono.empty()) {
            m = ":";
            for (size_t i = 0; i < mono.size(); ++i) {
                if (i) m += " ";
                if (mono[i].deriv > 0) m += "D^" + std::to_string(mono[i].deriv) + " ";
                m += alg.genName(mono[i].gen);
            }
            m += ":";
        }
        pieces.push_back(coeffBody(coeff, m, first));
        first = false;
    }
    return joinSigned(pieces);
}

std::string printWeyl(const WeylElement& w) {
    if (w.isZero()) return "0";
    std::vector<std::pair<int, std::string>> pieces;
    bool first = true;
    for (const auto& [key, coeff] : w.terms()) {
        std::string m;
        auto emit = [&](const char* base, const std::vector<int>& exps) {
            for (size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (!m.empty()) m += " ";
                m += base + std::to_string(i + 1);
                if (exps[i] > 1) m += "^" + std::to_string(exps[i]);
            }
        };
        emit("x", key.first);
        emit("d", key.second);
        pieces.push_back(coeffBody(coeff, m, first));
        first = false;
    }
    return joinSigned(pieces);
}

std::string printPoly(const MultiPoly& p) {
    if (p.isZero()) return "0";
    if (p.vars() % 2 != 0) throw std::invalid_argument("Sym(V+V*) polynomial expected");
    int n = p.vars() / 2;
    std::vector<std::pair<int, std::string>> pieces;
    bool first = true;
    for (const auto& [exps, coeff] : p.terms()) {
        std::string m;
        for (int i = 0; i < p.vars(); ++i) {
            if (exps[i] == 0) continue;
            if (!m.empty()) m += " ";
            m += (i < n ? "x" + std::to_string(i + 1) : "xp" + std::to_string(i - n + 1));
            if (exps[i] > 1) m += "^" + std::to_string(exps[i]);
        }
        pieces.push_back(coeffBody(coeff, m, first));
        first = false;
    }
    return joinSigned(pieces);
}

}  // namespace vocal
