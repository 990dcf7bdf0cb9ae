#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qvitali/qparam.hpp"
#include "qvitali/rational.hpp"

/// A small expression language over the q-operations.
///
///   expr   := term (("o+" | "o-") term)*
///   term   := factor (("o*" | "o/") factor)*
///   factor := number | "(" expr ")" | funcname "(" expr ")"
///
/// Operators are left-associative. The Unicode forms U+2295..U+2298 are
/// accepted as aliases of o+ o- o* o/. Numbers are "-"? digits with an
/// optional ".digits" or "/digits" suffix, read exactly. Functions are qexp,
/// qlog and dn (the deformed number). Columns in diagnostics are 1-based and
/// count code points.
namespace qvitali {

enum class TokenKind { Number, QPlus, QMinus, QTimes, QDiv, LParen, RParen, FuncName };

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t column;
  friend bool operator==(const Token&, const Token&) = default;
};

// Throws LexError on unrecognized input.
std::vector<Token> tokenize(std::string_view input);

enum class BinaryOp { QPlus, QMinus, QTimes, QDiv };
enum class Func { QExp, QLog, Deformed };

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct Literal {
  Rational value;
};

struct Binary {
  BinaryOp op;
  ExprPtr left;
  ExprPtr right;
};

struct Call {
  Func func;
  ExprPtr arg;
};

struct ExprNode {
  std::variant<Literal, Binary, Call> node;
};

ExprPtr make_literal(Rational value);
ExprPtr make_binary(BinaryOp op, ExprPtr left, ExprPtr right);
ExprPtr make_call(Func func, ExprPtr arg);

// Structural equality.
bool operator==(const ExprNode& a, const ExprNode& b);

// Throws ParseError with an "expected ..." message.
ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view input);

// Prints with the fewest parentheses that re-parse to the same tree.
std::string to_string(const ExprNode& node);

// True when the tree uses only o+ and o- on literals.
bool is_rational_closed(const ExprNode& node);

enum class EvalMode { Exact, Float };
using Value = std::variant<Rational, double>;

// Throws ModeError on o*, o/ or a function call; SingularOperand from o-.
Rational evaluate_exact(const ExprNode& node, const QParam& q);
// binary64 throughout; propagates DomainError and SingularOperand.
double evaluate_float(const ExprNode& node, const QParam& q);
Value evaluate(const ExprNode& node, const QParam& q, EvalMode mode);

} // namespace qvitali
