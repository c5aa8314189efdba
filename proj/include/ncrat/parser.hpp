#pragma once

#include <string>

#include "ncrat/expr.hpp"

namespace ncrat {

/// Parses the expression grammar:
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" positive-integer)?
///   atom   := rational | var | "(" expr ")" | matrix | "inv" "(" expr ")"
///   matrix := "[" row ("," row)* "]" ;  row := "[" expr ("," expr)* "]"
///   var    := "z" integer ;  rational := integer ("/" positive-integer)?
/// Whitespace is insignificant. Subtraction, unary minus and powers are
/// sugar desugared to Add/Mul. Purely polynomial subtrees collapse into
/// single Poly leaves; matrix literals stay Block nodes.
///
/// Every inv(...) receives a sampled invertibility witness; if none is found
/// the expression is rejected (DegenerateInverse).
RatExpr parse(const std::string& text, int d);

/// Prints an expression in the grammar above. Matrix-coefficient polynomials
/// print as matrix literals, so parse(format(e), d) equals e up to the
/// Block-of-polynomials normalization. Multi-tuple nodes (tensor/iota and
/// primed variables) print in a display-only notation that does not re-parse.
std::string format(const RatExpr& e);

/// Expression file payload: a "d=<count>" header line followed by the
/// expression source.
struct ExprFile {
    int d;
    RatExpr expr;
};

ExprFile parse_expr_file(const std::string& contents);
std::string format_expr_file(const RatExpr& e);

}  // namespace ncrat
