#pragma once

// One-variable math expressions evaluated over dual numbers.
//
// Grammar (lowest to highest precedence):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := number | ident | ident '(' expr (',' expr)? ')' | '(' expr ')'
//
// '^' is right-associative and binds tighter than unary minus, so -x^2 is
// -(x^2) and 2^3^2 is 2^9. '*' and '/' associate to the left.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gencx/dual.hpp"

namespace gencx::expr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  /// Character offset into the source, in [0, source.size()].
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public std::runtime_error {
 public:
  enum class Kind {
    unbound_variable,
    non_real_argument,  // dual-valued exponent or logarithm base
    domain,
  };

  EvalError(Kind kind, const std::string& message, std::size_t position)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// Tokens

enum class TokenKind { number, identifier, plus, minus, star, slash, caret, lparen, rparen, comma };

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position = 0;
  double value = 0.0;  // number tokens only
};

std::string_view to_string(TokenKind kind) noexcept;

/// Splits `source` into tokens, skipping whitespace.
std::vector<Token> tokenize(std::string_view source);

// ---------------------------------------------------------------------------
// Syntax tree

enum class Function {
  sin, cos, tan, cot, asin, acos, atan, acot,
  sinh, cosh, tanh, coth,
  exp, log, sqrt, cbrt, abs, conj,
};

std::string_view to_string(Function fn) noexcept;
std::optional<Function> lookup_function(std::string_view name) noexcept;

enum class BinaryOperator { add, sub, mul, div, pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct NumberLit {
  double value;
};
struct Variable {
  std::string name;
};
struct UnaryNeg {
  NodePtr operand;
};
struct BinaryOp {
  BinaryOperator op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Function fn;
  std::vector<NodePtr> args;  // one argument, or two for log(base, x)
};

struct Node {
  std::variant<NumberLit, Variable, UnaryNeg, BinaryOp, Call> data;
  std::size_t position = 0;
};

NodePtr parse(std::span<const Token> tokens);
NodePtr parse(std::string_view source);

/// Fully parenthesized source text that parses back to an equivalent tree.
std::string to_source(const Node& node);

// ---------------------------------------------------------------------------
// Evaluation

/// Names bound without user input. A binding of the same name shadows them.
inline constexpr std::string_view builtin_constants[] = {"pi", "e"};

bool is_builtin_constant(std::string_view name) noexcept;

using DualBindings = std::map<std::string, Dual<double>, std::less<>>;
using RealBindings = std::map<std::string, double, std::less<>>;

Dual<double> eval_dual(const Node& node, const DualBindings& bindings);

/// Plain double evaluation with real-domain checks; shares no arithmetic with
/// eval_dual.
double eval_real(const Node& node, const RealBindings& bindings);

std::set<std::string> free_variables(const Node& node);

}  // namespace gencx::expr
