#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qvitali/errors.hpp"
#include "qvitali/qexpr.hpp"

using namespace qvitali;

namespace {

const QParam half(Rational(1, 2));

std::vector<TokenKind> kinds(const std::vector<Token>& ts) {
  std::vector<TokenKind> out;
  for (const auto& t : ts) out.push_back(t.kind);
  return out;
}

template <class E>
std::size_t error_column(std::string_view text) {
  try {
    (void)parse(text);
  } catch (const E& e) {
    return e.column();
  }
  return 0;
}

} // namespace

TEST_CASE("tokenize q-operators") {
  const auto ts = tokenize("1/2 o+ 1/3");
  CHECK(kinds(ts) == std::vector{TokenKind::Number, TokenKind::QPlus, TokenKind::Number});
  CHECK(ts[0].lexeme == "1/2");
  CHECK(ts[2].column == 8);
  CHECK(kinds(tokenize("1o-2 o*3o/4")) ==
        std::vector{TokenKind::Number, TokenKind::QMinus, TokenKind::Number, TokenKind::QTimes, TokenKind::Number,
                    TokenKind::QDiv, TokenKind::Number});
}

TEST_CASE("tokenize function calls") {
  const auto ts = tokenize("qexp(2)");
  CHECK(kinds(ts) == std::vector{TokenKind::FuncName, TokenKind::LParen, TokenKind::Number, TokenKind::RParen});
  CHECK(ts[0].lexeme == "qexp");
}

TEST_CASE("unicode operator aliases") {
  CHECK(kinds(tokenize("1 ⊕ 2 ⊖ 3 ⊗ 4 ⊘ 5")) ==
        kinds(tokenize("1 o+ 2 o- 3 o* 4 o/ 5")));
  // Columns count code points, not bytes.
  CHECK(tokenize("1 ⊕ 2")[2].column == 5);
}

TEST_CASE("lex errors carry 1-based columns") {
  CHECK(error_column<LexError>("1 $ 2") == 3);
  CHECK(error_column<LexError>("foo(1)") == 1);
  CHECK(error_column<LexError>("1 o+ 2.") == 8);
  CHECK(error_column<LexError>("1/0") == 1);
  CHECK(error_column<LexError>("1 o 2") == 3);
}

TEST_CASE("precedence and grouping") {
  const ExprPtr flat = parse("1 o+ 2 o* 3");
  const ExprPtr want = make_binary(BinaryOp::QPlus, make_literal(Rational(1)),
                                   make_binary(BinaryOp::QTimes, make_literal(Rational(2)), make_literal(Rational(3))));
  CHECK(*flat == *want);

  const ExprPtr grouped = parse("(1 o+ 2) o* 3");
  const ExprPtr want2 = make_binary(BinaryOp::QTimes,
                                    make_binary(BinaryOp::QPlus, make_literal(Rational(1)), make_literal(Rational(2))),
                                    make_literal(Rational(3)));
  CHECK(*grouped == *want2);
}

TEST_CASE("operators are left-associative") {
  const ExprPtr e = parse("1 o- 2 o- 3");
  const ExprPtr want = make_binary(BinaryOp::QMinus,
                                   make_binary(BinaryOp::QMinus, make_literal(Rational(1)), make_literal(Rational(2))),
                                   make_literal(Rational(3)));
  CHECK(*e == *want);
  CHECK(to_string(*e) == "1 o- 2 o- 3");
  CHECK(to_string(*parse("1 o- (2 o- 3)")) == "1 o- (2 o- 3)");
  CHECK(to_string(*parse("((qexp((1))))")) == "qexp(1)");
}

TEST_CASE("parse errors") {
  try {
    (void)parse("1 o+");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "expected factor");
    CHECK(e.column() == 5);
  }
  CHECK(error_column<ParseError>("") == 1);
  CHECK(error_column<ParseError>("(1 o+ 2") == 8);
  CHECK(error_column<ParseError>("1 2") == 3);
  CHECK(error_column<ParseError>("qexp 2") == 6);
  CHECK(error_column<ParseError>(") 1") == 1);
}

TEST_CASE("exact evaluation") {
  CHECK(evaluate_exact(*parse("1/2 o+ 1/3"), half) == Rational(11, 12));
  CHECK(evaluate_exact(*parse("0.5 o+ 0.25"), QParam(Rational(1))) == Rational(3, 4));
  CHECK(evaluate_exact(*parse("11/12 o- 1/3"), half) == Rational(1, 2));
  CHECK_THROWS_AS(evaluate_exact(*parse("2 o* 3"), half), ModeError);
  CHECK_THROWS_AS(evaluate_exact(*parse("2 o/ 3"), half), ModeError);
  CHECK_THROWS_AS(evaluate_exact(*parse("dn(1)"), half), ModeError);
  CHECK(is_rational_closed(*parse("1 o+ (2 o- 3)")));
  CHECK_FALSE(is_rational_closed(*parse("1 o+ qlog(2)")));
}

TEST_CASE("float evaluation") {
  CHECK(evaluate_float(*parse("qexp(2)"), half) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(evaluate_float(*parse("4 o* 4"), half) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(evaluate_float(*parse("9 o/ 4"), half) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(evaluate_float(*parse("qlog(4)"), half) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(evaluate_float(*parse("dn(1)"), half) == doctest::Approx(2.0 * std::log(1.5)).epsilon(1e-15));
  const auto v = evaluate(*parse("1/2 o+ 1/3"), half, EvalMode::Exact);
  CHECK(std::get<Rational>(v) == Rational(11, 12));
  const auto f = evaluate(*parse("1/2 o+ 1/3"), half, EvalMode::Float);
  CHECK(std::get<double>(f) == doctest::Approx(11.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("arithmetic errors propagate") {
  CHECK_THROWS_AS(evaluate_exact(*parse("1 o- -2"), half), SingularOperand);
  CHECK_THROWS_AS(evaluate_float(*parse("1 o- -2"), half), SingularOperand);
  CHECK_THROWS_AS(evaluate_float(*parse("qlog(0)"), half), DomainError);
  CHECK_THROWS_AS(evaluate_float(*parse("dn(-3)"), half), DomainError);
  CHECK_THROWS_AS(evaluate_float(*parse("-1 o* 2"), half), DomainError);
}

TEST_CASE("negative and decimal literals") {
  CHECK(evaluate_exact(*parse("-1/2 o+ 0.125"), QParam(Rational(1))) == Rational(-3, 8));
  CHECK(to_string(*parse("-1/2 o+ 0.125")) == "-1/2 o+ 1/8");
}
