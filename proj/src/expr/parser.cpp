#include <array>
#include <charconv>
#include <string>
#include <utility>

#include "gencx/expr.hpp"

namespace gencx::expr {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 18> kFunctions{{
    {"sin", Function::sin},   {"cos", Function::cos},   {"tan", Function::tan},
    {"cot", Function::cot},   {"asin", Function::asin}, {"acos", Function::acos},
    {"atan", Function::atan}, {"acot", Function::acot}, {"sinh", Function::sinh},
    {"cosh", Function::cosh}, {"tanh", Function::tanh}, {"coth", Function::coth},
    {"exp", Function::exp},   {"log", Function::log},   {"sqrt", Function::sqrt},
    {"cbrt", Function::cbrt}, {"abs", Function::abs},   {"conj", Function::conj},
}};

NodePtr make_node(std::size_t position, auto&& data) {
  return std::make_shared<const Node>(Node{std::forward<decltype(data)>(data), position});
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  NodePtr parse_all() {
    if (tokens_.empty()) throw ParseError("empty expression", 0);
    NodePtr root = expr();
    if (!at_end()) throw ParseError("unexpected " + describe(peek()), peek().position);
    return root;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    while (check(TokenKind::plus) || check(TokenKind::minus)) {
      const Token& op = advance();
      NodePtr rhs = term();
      const auto kind = op.kind == TokenKind::plus ? BinaryOperator::add : BinaryOperator::sub;
      lhs = make_node(op.position, BinaryOp{kind, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (check(TokenKind::star) || check(TokenKind::slash)) {
      const Token& op = advance();
      NodePtr rhs = unary();
      const auto kind = op.kind == TokenKind::star ? BinaryOperator::mul : BinaryOperator::div;
      lhs = make_node(op.position, BinaryOp{kind, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  NodePtr unary() {
    if (check(TokenKind::minus)) {
      const Token& op = advance();
      return make_node(op.position, UnaryNeg{unary()});
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (check(TokenKind::caret)) {
      const Token& op = advance();
      NodePtr exponent = unary();
      return make_node(op.position, BinaryOp{BinaryOperator::pow, std::move(base), std::move(exponent)});
    }
    return base;
  }

  NodePtr atom() {
    if (at_end()) throw ParseError("unexpected end of expression", end_position());
    const Token& tok = advance();
    switch (tok.kind) {
      case TokenKind::number:
        return make_node(tok.position, NumberLit{tok.value});
      case TokenKind::identifier:
        return identifier(tok);
      case TokenKind::lparen: {
        NodePtr inner = expr();
        expect(TokenKind::rparen, "expected ')' to close '(' at offset " + std::to_string(tok.position));
        return inner;
      }
      default:
        throw ParseError("unexpected " + describe(tok), tok.position);
    }
  }

  NodePtr identifier(const Token& name) {
    const auto fn = lookup_function(name.lexeme);
    if (!check(TokenKind::lparen)) {
      if (fn) throw ParseError("expected '(' after function '" + name.lexeme + "'", current_position());
      return make_node(name.position, Variable{name.lexeme});
    }
    if (!fn) throw ParseError("unknown function '" + name.lexeme + "'", name.position);
    advance();  // '('
    std::vector<NodePtr> args;
    args.push_back(expr());
    while (check(TokenKind::comma)) {
      advance();
      args.push_back(expr());
    }
    expect(TokenKind::rparen, "expected ')' to close call to '" + name.lexeme + "'");
    const std::size_t max_arity = *fn == Function::log ? 2 : 1;
    if (args.size() > max_arity) {
      throw ParseError("function '" + name.lexeme + "' takes " +
                           (max_arity == 1 ? std::string("1 argument") : std::string("1 or 2 arguments")) + ", got " +
                           std::to_string(args.size()),
                       name.position);
    }
    return make_node(name.position, Call{*fn, std::move(args)});
  }

  static std::string describe(const Token& tok) {
    if (tok.kind == TokenKind::number || tok.kind == TokenKind::identifier) {
      return std::string(to_string(tok.kind)) + " '" + tok.lexeme + "'";
    }
    return std::string(to_string(tok.kind));
  }

  bool at_end() const { return pos_ >= tokens_.size(); }
  bool check(TokenKind kind) const { return !at_end() && tokens_[pos_].kind == kind; }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  std::size_t end_position() const {
    if (tokens_.empty()) return 0;
    const Token& last = tokens_.back();
    return last.position + last.lexeme.size();
  }
  std::size_t current_position() const { return at_end() ? end_position() : peek().position; }

  void expect(TokenKind kind, const std::string& message) {
    if (!check(kind)) throw ParseError(message, current_position());
    advance();
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

std::string number_source(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  std::string s(buf.data(), res.ptr);
  return v < 0 ? "(" + s + ")" : s;
}

}  // namespace

std::string_view to_string(Function fn) noexcept {
  for (const auto& [name, f] : kFunctions) {
    if (f == fn) return name;
  }
  return "?";
}

std::optional<Function> lookup_function(std::string_view name) noexcept {
  for (const auto& [n, f] : kFunctions) {
    if (n == name) return f;
  }
  return std::nullopt;
}

NodePtr parse(std::span<const Token> tokens) { return Parser(tokens).parse_all(); }

NodePtr parse(std::string_view source) {
  const auto tokens = tokenize(source);
  if (tokens.empty()) throw ParseError("empty expression", source.size());
  return parse(tokens);
}

std::string to_source(const Node& node) {
  struct Visitor {
    std::string operator()(const NumberLit& n) const { return number_source(n.value); }
    std::string operator()(const Variable& v) const { return v.name; }
    std::string operator()(const UnaryNeg& u) const { return "(-" + to_source(*u.operand) + ")"; }
    std::string operator()(const BinaryOp& b) const {
      static constexpr char kOps[] = {'+', '-', '*', '/', '^'};
      return "(" + to_source(*b.lhs) + " " + kOps[static_cast<int>(b.op)] + " " + to_source(*b.rhs) + ")";
    }
    std::string operator()(const Call& c) const {
      std::string out(to_string(c.fn));
      out += '(';
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_source(*c.args[i]);
      }
      return out + ')';
    }
  };
  return std::visit(Visitor{}, node.data);
}

}  // namespace gencx::expr
