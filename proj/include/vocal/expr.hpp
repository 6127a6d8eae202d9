#pragma once

#include "vocal/commutant.hpp"
#include "vocal/poly.hpp"
#include "vocal/state.hpp"
#include "vocal/weyl.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vocal {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& message)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + message),
          line(line_),
          col(col_) {}
};

enum class ExprKind {
    ScalarLit,  // scalar · vacuum (or scalar · 1 in weyl/poly mode)
    Gen,        // generator reference by name
    Deriv,      // D^k child
    Wick,       // :f1 f2 ... fk:, elaborated right-nested
    Sum,        // signed sum of children
    ScalarMul,  // scalar * child
    Circle,     // lhs circ n rhs
    Builtin,    // named constant, optionally with bracket arguments
    VarPow,     // weyl/poly variable with power
    Product     // juxtaposed weyl/poly factors
};

struct Expr {
    ExprKind kind;
    Scalar scalar;
    std::string name;
    std::vector<long> args;  // Deriv order / Circle n / VarPow power / Builtin indices / Sum signs
    std::vector<Expr> children;
    int line = 1;
    int col = 1;
};

enum class ExprMode { State, Weyl, Poly };

struct ElabContext {
    const FreeAlgebraSpec* algebra = nullptr;
    const DiagonalAction* action = nullptr;
    std::vector<Scalar> alpha;  // per pair; defaults to 1/2 when empty
};

Expr parseExpr(const std::string& text, ExprMode mode);

State elaborateState(const Expr& e, const ElabContext& ctx);
WeylElement elaborateWeyl(const Expr& e, int n);
MultiPoly elaboratePoly(const Expr& e, int n);

State parseState(const std::string& text, const ElabContext& ctx);
WeylElement parseWeylElement(const std::string& text, int n);
MultiPoly parsePolyElement(const std::string& text, int n);
Scalar parseScalarLiteral(const std::string& text);

std::string printState(const State& s);
std::string printWeyl(const WeylElement& w);
std::string printPoly(const MultiPoly& p);

}  // namespace vocal
