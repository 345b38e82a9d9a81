#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nega/cyclotomic.hpp"
#include "nega/zq.hpp"

namespace nega {

// Integer polynomial expressions over the lifted variables x1..xn.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' uint)?
//   atom   := uint | 'x' uint | '(' expr ')'
//
// '^' binds tighter than unary minus, so "-x1^2" is -(x1^2). Exponents are
// limited to kMaxExponent. There is no implicit multiplication.
class PolyExpr {
 public:
  enum class Kind { literal, variable, negate, add, subtract, multiply, power };

  struct Node {
    Kind kind;
    BigInt literal;          // literal
    int variable = 0;        // variable, 1-based
    unsigned exponent = 0;   // power
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  PolyExpr(std::shared_ptr<const Node> root, int arity) : root_(std::move(root)), arity_(arity) {}

  const Node& root() const noexcept { return *root_; }
  int arity() const noexcept { return arity_; }

 private:
  std::shared_ptr<const Node> root_;
  int arity_;
};

inline constexpr unsigned kMaxExponent = 64;

class ParseError : public std::runtime_error {
 public:
  enum class Reason { syntax, variable_out_of_range, exponent_overflow };

  ParseError(Reason reason, std::size_t column, const std::string& message)
      : std::runtime_error("column " + std::to_string(column) + ": " + message), reason_(reason), column_(column) {}

  Reason reason() const noexcept { return reason_; }
  // 1-based position in the source text.
  std::size_t column() const noexcept { return column_; }

 private:
  Reason reason_;
  std::size_t column_;
};

// Throws ParseError.
PolyExpr parse_poly(std::string_view source, int arity);

// Canonical rendering with the minimum set of parentheses and no whitespace.
std::string to_string(const PolyExpr& e);

// Value of e over the integers, with xi bound to lifted[i-1].
BigInt evaluate(const PolyExpr& e, std::span<const int> lifted);

// Evaluates at every point with variables bound to their lifts and reduces the
// integer result once, mod 2q.
GenFunction eval_to_function(const PolyExpr& e, Modulus q);

}  // namespace nega
