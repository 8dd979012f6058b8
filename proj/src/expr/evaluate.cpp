#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "gencx/dual_math.hpp"
#include "gencx/error.hpp"
#include "gencx/expr.hpp"

namespace gencx::expr {

namespace {

std::optional<double> constant_value(std::string_view name) {
  if (name == "pi") return std::numbers::pi;
  if (name == "e") return std::numbers::e;
  return std::nullopt;
}

[[noreturn]] void fail_domain(const std::string& message, std::size_t position) {
  throw EvalError(EvalError::Kind::domain, message, position);
}

// ---------------------------------------------------------------------------
// Dual evaluation

class DualEvaluator {
 public:
  explicit DualEvaluator(const DualBindings& bindings) : bindings_(bindings) {}

  Dual<double> eval(const Node& node) const {
    try {
      return std::visit([&](const auto& n) { return visit(n, node.position); }, node.data);
    } catch (const DomainError& e) {
      // Attach the innermost node position to errors raised by dual math.
      throw EvalError(EvalError::Kind::domain, e.what(), node.position);
    }
  }

 private:
  Dual<double> visit(const NumberLit& n, std::size_t) const { return Dual<double>(n.value); }

  Dual<double> visit(const Variable& v, std::size_t pos) const {
    if (const auto it = bindings_.find(v.name); it != bindings_.end()) return it->second;
    if (const auto c = constant_value(v.name)) return Dual<double>(*c);
    throw EvalError(EvalError::Kind::unbound_variable, "unbound variable '" + v.name + "'", pos);
  }

  Dual<double> visit(const UnaryNeg& u, std::size_t) const { return -eval(*u.operand); }

  Dual<double> visit(const BinaryOp& b, std::size_t pos) const {
    if (b.op == BinaryOperator::pow) {
      const Dual<double> exponent = eval(*b.rhs);
      if (!isreal(exponent)) {
        throw EvalError(EvalError::Kind::non_real_argument, "exponent must be real-valued (dual exponent " +
                                                                std::to_string(exponent.imag()) + "ε)",
                        pos);
      }
      return powf(eval(*b.lhs), exponent.real());
    }
    const Dual<double> lhs = eval(*b.lhs);
    const Dual<double> rhs = eval(*b.rhs);
    switch (b.op) {
      case BinaryOperator::add: return lhs + rhs;
      case BinaryOperator::sub: return lhs - rhs;
      case BinaryOperator::mul: return lhs * rhs;
      case BinaryOperator::div: return lhs / rhs;
      case BinaryOperator::pow: break;
    }
    return {};
  }

  Dual<double> visit(const Call& c, std::size_t pos) const {
    if (c.fn == Function::log && c.args.size() == 2) {
      const Dual<double> base = eval(*c.args[0]);
      if (!isreal(base)) {
        throw EvalError(EvalError::Kind::non_real_argument, "logarithm base must be real-valued", pos);
      }
      return log_base(base.real(), eval(*c.args[1]));
    }
    const Dual<double> z = eval(*c.args.front());
    switch (c.fn) {
      case Function::sin: return sin(z);
      case Function::cos: return cos(z);
      case Function::tan: return tan(z);
      case Function::cot: return cot(z);
      case Function::asin: return asin(z);
      case Function::acos: return acos(z);
      case Function::atan: return atan(z);
      case Function::acot: return acot(z);
      case Function::sinh: return sinh(z);
      case Function::cosh: return cosh(z);
      case Function::tanh: return tanh(z);
      case Function::coth: return coth(z);
      case Function::exp: return exp(z);
      case Function::log: return log(z);
      case Function::sqrt: return sqrt(z);
      case Function::cbrt: return cbrt(z);
      case Function::abs: return Dual<double>(abs(z));
      case Function::conj: return conj(z);
    }
    return {};
  }

  const DualBindings& bindings_;
};

// ---------------------------------------------------------------------------
// Real evaluation

/// b^p on the reals: integer p, positive b, or an odd-denominator rational p.
double real_pow(double b, double p, std::size_t pos) {
  if (std::trunc(p) == p && std::abs(p) < 4.0e15) {
    if (b == 0.0 && p < 0.0) fail_domain("0 raised to a negative power", pos);
    return std::pow(b, p);
  }
  if (b > 0.0) return std::pow(b, p);
  for (std::int64_t m = 3; m <= 63; m += 2) {
    const double n = std::nearbyint(p * static_cast<double>(m));
    if (n / static_cast<double>(m) != p) continue;
    if (b == 0.0) {
      if (p > 0.0) return 0.0;
      fail_domain("0 raised to a negative power", pos);
    }
    const double mag = std::pow(-b, p);
    return std::fmod(n, 2.0) != 0.0 ? -mag : mag;
  }
  if (b == 0.0 && p > 0.0) return 0.0;
  fail_domain("negative base with a non-integer exponent", pos);
}

class RealEvaluator {
 public:
  explicit RealEvaluator(const RealBindings& bindings) : bindings_(bindings) {}

  double eval(const Node& node) const {
    return std::visit([&](const auto& n) { return visit(n, node.position); }, node.data);
  }

 private:
  double visit(const NumberLit& n, std::size_t) const { return n.value; }

  double visit(const Variable& v, std::size_t pos) const {
    if (const auto it = bindings_.find(v.name); it != bindings_.end()) return it->second;
    if (const auto c = constant_value(v.name)) return *c;
    throw EvalError(EvalError::Kind::unbound_variable, "unbound variable '" + v.name + "'", pos);
  }

  double visit(const UnaryNeg& u, std::size_t) const { return -eval(*u.operand); }

  double visit(const BinaryOp& b, std::size_t pos) const {
    const double lhs = eval(*b.lhs);
    const double rhs = eval(*b.rhs);
    switch (b.op) {
      case BinaryOperator::add: return lhs + rhs;
      case BinaryOperator::sub: return lhs - rhs;
      case BinaryOperator::mul: return lhs * rhs;
      case BinaryOperator::div:
        if (rhs == 0.0) fail_domain("division by zero", pos);
        return lhs / rhs;
      case BinaryOperator::pow: return real_pow(lhs, rhs, pos);
    }
    return 0.0;
  }

  double visit(const Call& c, std::size_t pos) const {
    if (c.fn == Function::log && c.args.size() == 2) {
      const double base = eval(*c.args[0]);
      const double x = eval(*c.args[1]);
      if (!(base > 0.0) || base == 1.0) fail_domain("logarithm base must be positive and != 1", pos);
      if (x <= 0.0) fail_domain("log of a nonpositive value", pos);
      return std::log(x) / std::log(base);
    }
    const double x = eval(*c.args.front());
    switch (c.fn) {
      case Function::sin: return std::sin(x);
      case Function::cos: return std::cos(x);
      case Function::tan: return std::tan(x);
      case Function::cot: {
        const double s = std::sin(x);
        if (s == 0.0) fail_domain("cot pole", pos);
        return std::cos(x) / s;
      }
      case Function::asin:
        if (std::abs(x) > 1.0) fail_domain("asin argument outside [-1, 1]", pos);
        return std::asin(x);
      case Function::acos:
        if (std::abs(x) > 1.0) fail_domain("acos argument outside [-1, 1]", pos);
        return std::acos(x);
      case Function::atan: return std::atan(x);
      case Function::acot: return std::atan(1.0 / x);
      case Function::sinh: return std::sinh(x);
      case Function::cosh: return std::cosh(x);
      case Function::tanh: return std::tanh(x);
      case Function::coth:
        if (x == 0.0) fail_domain("coth pole", pos);
        return 1.0 / std::tanh(x);
      case Function::exp: return std::exp(x);
      case Function::log:
        if (x <= 0.0) fail_domain("log of a nonpositive value", pos);
        return std::log(x);
      case Function::sqrt:
        if (x < 0.0) fail_domain("sqrt of a negative value", pos);
        return std::sqrt(x);
      case Function::cbrt: return std::cbrt(x);
      // Sign-preserving modulus and conjugate both reduce to x on the reals.
      case Function::abs: return x;
      case Function::conj: return x;
    }
    return 0.0;
  }

  const RealBindings& bindings_;
};

void collect_variables(const Node& node, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Variable>) {
          if (!is_builtin_constant(n.name)) out.insert(n.name);
        } else if constexpr (std::is_same_v<N, UnaryNeg>) {
          collect_variables(*n.operand, out);
        } else if constexpr (std::is_same_v<N, BinaryOp>) {
          collect_variables(*n.lhs, out);
          collect_variables(*n.rhs, out);
        } else if constexpr (std::is_same_v<N, Call>) {
          for (const auto& arg : n.args) collect_variables(*arg, out);
        }
      },
      node.data);
}

}  // namespace

bool is_builtin_constant(std::string_view name) noexcept {
  for (const auto c : builtin_constants) {
    if (c == name) return true;
  }
  return false;
}

Dual<double> eval_dual(const Node& node, const DualBindings& bindings) { return DualEvaluator(bindings).eval(node); }

double eval_real(const Node& node, const RealBindings& bindings) { return RealEvaluator(bindings).eval(node); }

std::set<std::string> free_variables(const Node& node) {
  std::set<std::string> names;
  collect_variables(node, names);
  return names;
}

}  // namespace gencx::expr
