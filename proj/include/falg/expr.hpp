#pragma once

/**
 * @file expr.hpp
 * @brief Expressions over a loaded algebra.
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary ('*' unary)*          left-grouped; parentheses override
 *   unary   := '-' unary | primary
 *   primary := INT | INT '/' INT | '`' label '`' | IDENT
 *            | '(' expr ')' | '[' expr ',' expr ']' | '<' expr ',' expr ',' expr '>'
 *
 * `*` is the algebra product (scalar action when either side is a scalar).
 * [a,b] is the commutator and <a,b,c> the associator. An identifier is a
 * bound vector, or the basis vector e_n when spelled e<n> and unbound.
 * Scalars meet vectors in sums as multiples of the unit e_0.
 */

#include "falg/catalog.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace falg {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

struct Expr {
  enum class Kind { Number, Label, Ident, Neg, Add, Sub, Mul, Commutator, Associator };

  Kind kind;
  std::string text;  // Number, Label, Ident
  std::vector<std::shared_ptr<const Expr>> args;
  int line = 1, column = 1;

  /// Structural equality; source positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view text);
/// Minimal-parenthesis rendering that parses back to the same tree.
std::string print_expr(const Expr& e);

struct EvalEnv {
  AlgebraFixture fixture;
  std::map<std::string, Vector, std::less<>> bindings;
};

Vector eval(const Expr& e, const EvalEnv& env);

}  // namespace falg
