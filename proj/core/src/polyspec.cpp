#include "nega/polyspec.hpp"

#include <cctype>

namespace nega {
namespace {

using Node = PolyExpr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = PolyExpr::Kind;

constexpr int kMaxDepth = 256;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  Parser(std::string_view src, int arity) : src_(src), arity_(arity) {}

  NodePtr parse() {
    NodePtr e = expr(0);
    skip_space();
    if (pos_ != src_.size()) fail(ParseError::Reason::syntax, pos_, "unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(ParseError::Reason reason, std::size_t at, const std::string& message) const {
    throw ParseError(reason, at + 1, message);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void enter(int depth) const {
    if (depth > kMaxDepth) fail(ParseError::Reason::syntax, pos_, "expression nested too deeply");
  }

  // Digits at pos_; caller has skipped whitespace.
  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  NodePtr expr(int depth) {
    enter(depth);
    NodePtr lhs = term(depth + 1);
    for (;;) {
      if (accept('+')) {
        lhs = make(Kind::add, lhs, term(depth + 1));
      } else if (accept('-')) {
        lhs = make(Kind::subtract, lhs, term(depth + 1));
      } else {
        return lhs;
      }
    }
  }

  NodePtr term(int depth) {
    enter(depth);
    NodePtr lhs = unary(depth + 1);
    while (accept('*')) lhs = make(Kind::multiply, lhs, unary(depth + 1));
    return lhs;
  }

  NodePtr unary(int depth) {
    enter(depth);
    if (accept('-')) return make(Kind::negate, unary(depth + 1));
    return power(depth + 1);
  }

  NodePtr power(int depth) {
    NodePtr base = atom(depth + 1);
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const auto text = digits();
    if (text.empty()) fail(ParseError::Reason::syntax, at, "expected a non-negative integer exponent");
    if (text.size() > 3 || std::stoul(std::string(text)) > kMaxExponent) {
      fail(ParseError::Reason::exponent_overflow, at, "exponent exceeds " + std::to_string(kMaxExponent));
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::power;
    node->lhs = std::move(base);
    node->exponent = static_cast<unsigned>(std::stoul(std::string(text)));
    return node;
  }

  NodePtr atom(int depth) {
    enter(depth);
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) fail(ParseError::Reason::syntax, at, "unexpected end of expression");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto node = std::make_shared<Node>();
      node->kind = Kind::literal;
      node->literal = BigInt(std::string(digits()));
      return node;
    }
    if (c == 'x') {
      ++pos_;
      const auto text = digits();
      if (text.empty()) fail(ParseError::Reason::syntax, at, "expected a variable index after 'x'");
      const bool too_long = text.size() > 9;
      const long index = too_long ? 0 : std::stol(std::string(text));
      if (too_long || index < 1 || index > arity_) {
        fail(ParseError::Reason::variable_out_of_range, at,
             "variable x" + std::string(text) + " outside x1..x" + std::to_string(arity_));
      }
      auto node = std::make_shared<Node>();
      node->kind = Kind::variable;
      node->variable = static_cast<int>(index);
      return node;
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr(depth + 1);
      if (!accept(')')) fail(ParseError::Reason::syntax, pos_, "expected ')'");
      return inner;
    }
    fail(ParseError::Reason::syntax, at, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  int arity_;
  std::size_t pos_ = 0;
};

int precedence(Kind k) {
  switch (k) {
    case Kind::add:
    case Kind::subtract: return 1;
    case Kind::multiply: return 2;
    case Kind::negate: return 3;
    case Kind::power: return 4;
    case Kind::literal:
    case Kind::variable: return 5;
  }
  return 5;
}

void print(const Node& node, std::string& out);

void print_child(const Node& child, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  print(child, out);
  if (parenthesize) out += ')';
}

void print(const Node& node, std::string& out) {
  const int p = precedence(node.kind);
  switch (node.kind) {
    case Kind::literal: out += node.literal.get_str(); return;
    case Kind::variable: out += "x" + std::to_string(node.variable); return;
    case Kind::negate:
      out += '-';
      print_child(*node.lhs, precedence(node.lhs->kind) < p, out);
      return;
    case Kind::power:
      print_child(*node.lhs, precedence(node.lhs->kind) < 5, out);
      out += "^" + std::to_string(node.exponent);
      return;
    case Kind::add:
    case Kind::subtract:
    case Kind::multiply:
      print_child(*node.lhs, precedence(node.lhs->kind) < p, out);
      out += node.kind == Kind::add ? '+' : node.kind == Kind::subtract ? '-' : '*';
      print_child(*node.rhs, precedence(node.rhs->kind) <= p, out);
      return;
  }
}

BigInt eval(const Node& node, std::span<const int> lifted) {
  switch (node.kind) {
    case Kind::literal: return node.literal;
    case Kind::variable: return BigInt(lifted[static_cast<std::size_t>(node.variable - 1)]);
    case Kind::negate: return -eval(*node.lhs, lifted);
    case Kind::add: return eval(*node.lhs, lifted) + eval(*node.rhs, lifted);
    case Kind::subtract: return eval(*node.lhs, lifted) - eval(*node.rhs, lifted);
    case Kind::multiply: return eval(*node.lhs, lifted) * eval(*node.rhs, lifted);
    case Kind::power: {
      BigInt out;
      const BigInt base = eval(*node.lhs, lifted);
      mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), node.exponent);
      return out;
    }
  }
  return 0;
}

}  // namespace

PolyExpr parse_poly(std::string_view source, int arity) {
  if (arity < 1) throw std::invalid_argument("expressions need at least one variable");
  return PolyExpr(Parser(source, arity).parse(), arity);
}

std::string to_string(const PolyExpr& e) {
  std::string out;
  print(e.root(), out);
  return out;
}

BigInt evaluate(const PolyExpr& e, std::span<const int> lifted) {
  if (lifted.size() != static_cast<std::size_t>(e.arity())) throw std::invalid_argument("wrong number of variable values");
  return eval(e.root(), lifted);
}

GenFunction eval_to_function(const PolyExpr& e, Modulus q) {
  const PointGrid grid(q, e.arity());
  const BigInt target = q.twice();
  std::vector<int> values(grid.size());
  BigInt r;
  for (std::size_t x = 0; x < grid.size(); ++x) {
    const BigInt v = eval(e.root(), grid.digits(x));
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), target.get_mpz_t());
    values[x] = static_cast<int>(r.get_si());
  }
  return GenFunction(q, e.arity(), std::move(values));
}

}  // namespace nega
