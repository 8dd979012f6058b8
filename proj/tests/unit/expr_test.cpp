#include "gencx/expr.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gencx/dual_format.hpp"
#include "test_support.hpp"

namespace gencx::expr {
namespace {

using D = Dual<double>;

std::size_t parse_error_position(std::string_view src) {
  try {
    (void)parse(src);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << src << "'";
  return static_cast<std::size_t>(-1);
}

double eval_at(std::string_view src, double x) { return eval_dual(*parse(src), {{"x", D(x)}}).real(); }

TEST(Tokenize, Kinds) {
  const auto toks = tokenize("x*sin(x)");
  ASSERT_EQ(toks.size(), 6u);
  const TokenKind kinds[] = {TokenKind::identifier, TokenKind::star,   TokenKind::identifier,
                             TokenKind::lparen,     TokenKind::identifier, TokenKind::rparen};
  for (std::size_t i = 0; i < toks.size(); ++i) EXPECT_EQ(toks[i].kind, kinds[i]) << i;
  EXPECT_EQ(toks[2].lexeme, "sin");
  EXPECT_EQ(toks[3].position, 5u);
}

TEST(Tokenize, Numbers) {
  auto toks = tokenize("1.5e-3");
  ASSERT_EQ(toks.size(), 1u);
  EXPECT_EQ(toks[0].kind, TokenKind::number);
  EXPECT_EQ(toks[0].value, 0.0015);
  EXPECT_EQ(tokenize(".5")[0].value, 0.5);
  EXPECT_EQ(tokenize("2.")[0].value, 2.0);
  EXPECT_EQ(tokenize("3E+2")[0].value, 300.0);
  // "2e" leaves the 'e' as an identifier.
  toks = tokenize("2e");
  ASSERT_EQ(toks.size(), 2u);
  EXPECT_EQ(toks[1].kind, TokenKind::identifier);
}

TEST(Tokenize, Errors) {
  try {
    tokenize("x $ y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(tokenize("."), ParseError);
  EXPECT_THROW(tokenize("1e999"), ParseError);
}

TEST(Tokenize, PositionsStrictlyIncrease) {
  const auto toks = tokenize("  sin ( x ) ^ -2.5e1 , log(2,x)");
  for (std::size_t i = 1; i < toks.size(); ++i) EXPECT_LT(toks[i - 1].position, toks[i].position);
}

TEST(Parse, Precedence) {
  EXPECT_EQ(eval_at("2+3*4", 0), 14);
  EXPECT_EQ(eval_at("-x^2", 3), -9);
  EXPECT_EQ(eval_at("2^3^2", 0), 512);
  EXPECT_EQ(eval_at("8/4/2", 0), 1);
  EXPECT_EQ(eval_at("8-4-2", 0), 2);
  EXPECT_EQ(eval_at("2^-1", 0), 0.5);
  EXPECT_EQ(eval_at("--x", 4), 4);
  EXPECT_EQ(eval_at("(1+2)*3", 0), 9);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error_position("1 +"), 3u);
  EXPECT_EQ(parse_error_position("(1 + 2"), 6u);
  EXPECT_EQ(parse_error_position("foo(x)"), 0u);
  EXPECT_EQ(parse_error_position("1 + sin(x, x)"), 4u);
  EXPECT_EQ(parse_error_position("2 3"), 2u);
  EXPECT_EQ(parse_error_position("sin + 1"), 4u);
  EXPECT_EQ(parse_error_position(")"), 0u);
  EXPECT_EQ(parse_error_position("   "), 3u);
  EXPECT_EQ(parse_error_position("log(1,2,3)"), 0u);
  EXPECT_THROW(parse(std::span<const Token>{}), ParseError);
}

TEST(EvalDual, WorkedExample) {
  const D r = eval_dual(*parse("x*sin(x)"), {{"x", D(1, 1)}});
  EXPECT_EQ(r.real(), std::sin(1.0));
  EXPECT_DOUBLE_EQ(r.imag(), std::sin(1.0) + std::cos(1.0));
}

TEST(EvalDual, PowerRules) {
  EXPECT_EQ(eval_dual(*parse("x^2"), {{"x", epsilon}}), D(0, 0));
  try {
    eval_dual(*parse("x^x"), {{"x", D(2, 1)}});
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::non_real_argument);
    EXPECT_EQ(e.position(), 1u);
  }
  // A real exponent built from an ε-free subexpression is fine.
  EXPECT_EQ(eval_dual(*parse("x^(1+1)"), {{"x", D(2, 3)}}), D(4, 12));
  EXPECT_EQ(eval_dual(*parse("x^(1/3)"), {{"x", D(-8, 12)}}).real(), -2);
}

TEST(EvalDual, ErrorsCarryPositions) {
  try {
    eval_dual(*parse("1 + 1/x"), {{"x", D(0, 1)}});
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::domain);
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    eval_dual(*parse("y + 1"), {});
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::unbound_variable);
    EXPECT_EQ(e.position(), 0u);
  }
  try {
    eval_dual(*parse("log(x, 8)"), {{"x", D(2, 1)}});
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::non_real_argument);
  }
}

TEST(EvalDual, ConstantsAreShadowable) {
  EXPECT_EQ(eval_dual(*parse("pi"), {}).real(), std::numbers::pi);
  EXPECT_EQ(eval_dual(*parse("e"), {}).real(), std::numbers::e);
  EXPECT_EQ(eval_dual(*parse("pi"), {{"pi", D(3, 0)}}).real(), 3);
}

TEST(EvalDual, AbsAndConj) {
  EXPECT_EQ(eval_dual(*parse("abs(x)"), {{"x", D(-3, 5)}}), D(-3, 0));
  EXPECT_EQ(eval_dual(*parse("conj(x)"), {{"x", D(-3, 5)}}), D(-3, -5));
}

TEST(EvalReal, DomainGuards) {
  const auto at = [](std::string_view src, double x) { return eval_real(*parse(src), {{"x", x}}); };
  EXPECT_THROW(at("sqrt(x)", -1e-7), EvalError);
  EXPECT_EQ(at("sqrt(x)", 0), 0);
  EXPECT_THROW(at("log(x)", 0), EvalError);
  EXPECT_THROW(at("1/x", 0), EvalError);
  EXPECT_THROW(at("asin(x)", 1.5), EvalError);
  EXPECT_THROW(at("x^0.5", -4), EvalError);
  EXPECT_EQ(at("x^(1/3)", -8), -2);
  EXPECT_DOUBLE_EQ(at("x^(2/3)", -8), 4);
  EXPECT_THROW(at("x^-1", 0), EvalError);
}

TEST(FreeVariables, Sets) {
  EXPECT_EQ(free_variables(*parse("x*sin(x)")), (std::set<std::string>{"x"}));
  EXPECT_TRUE(free_variables(*parse("pi")).empty());
  EXPECT_EQ(free_variables(*parse("a+b")), (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(free_variables(*parse("log(t, e)")), (std::set<std::string>{"t"}));
}

TEST(ToSource, ReparsesToSameValue) {
  for (const char* src : {"-x^2", "2^3^2*x", "log(2, x) - cbrt(x)/3", "x - (x - 1)", "1.25e-3*x^-2"}) {
    const auto tree = parse(src);
    const auto again = parse(to_source(*tree));
    EXPECT_EQ(eval_dual(*tree, {{"x", D(1.7, 1)}}), eval_dual(*again, {{"x", D(1.7, 1)}})) << src;
  }
}

TEST(Properties, ZeroSeedMatchesRealEvaluation) {
  testing::Rng rng(61);
  for (const auto& e : testing::catalog()) {
    const auto tree = parse(e.source);
    for (int i = 0; i < 10; ++i) {
      const double a = rng.uniform(e.lo, e.hi);
      const D r = eval_dual(*tree, {{"x", D(a, 0)}});
      ASSERT_EQ(r.imag(), 0.0) << e.source;
      ASSERT_TRUE(testing::rel_close(r.real(), eval_real(*tree, {{"x", a}}), 1e-14)) << e.source;
    }
  }
}

TEST(Properties, WhitespaceDoesNotMatter) {
  const std::string src = "x*sin(x)+log(2,x)^2-cbrt(x)/(1+x^2)";
  testing::Rng rng(62);
  const D at(1.3, 1);
  const D ref = eval_dual(*parse(src), {{"x", at}});
  for (int k = 0; k < 50; ++k) {
    std::string spaced;
    for (const char c : src) {
      spaced += c;
      // Only between tokens: never inside an identifier or number.
      const bool word = std::isalnum(static_cast<unsigned char>(c)) || c == '.';
      if (!word && rng.integer(0, 1)) spaced += std::string(static_cast<std::size_t>(rng.integer(1, 3)), ' ');
    }
    if (rng.integer(0, 1)) spaced = " \t" + spaced + "\n";
    ASSERT_EQ(eval_dual(*parse(spaced), {{"x", at}}), ref) << spaced;
  }
}

TEST(Properties, ParseErrorPositionsAreInRange) {
  testing::Rng rng(63);
  const std::string alphabet = "x1+-*/^(),. sin$";
  int errors = 0;
  for (int k = 0; k < 2000; ++k) {
    std::string src;
    const auto len = rng.integer(0, 12);
    for (std::int64_t i = 0; i < len; ++i) src += alphabet[rng.integer(0, alphabet.size() - 1)];
    try {
      (void)parse(src);
    } catch (const ParseError& e) {
      ++errors;
      ASSERT_LE(e.position(), src.size()) << "'" << src << "'";
    }
  }
  EXPECT_GT(errors, 100);
}

}  // namespace
}  // namespace gencx::expr
