#include "qvitali/qexpr.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <utility>

#include "qvitali/errors.hpp"
#include "qvitali/qalgebra.hpp"

namespace qvitali {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Lexer {
public:
  explicit Lexer(std::string_view in) : in_(in) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      const std::size_t col = column_;
      if (c == '(') {
        out.push_back({TokenKind::LParen, "(", col});
        advance(1);
      } else if (c == ')') {
        out.push_back({TokenKind::RParen, ")", col});
        advance(1);
      } else if (is_digit(c) || (c == '-' && pos_ + 1 < in_.size() && is_digit(in_[pos_ + 1]))) {
        out.push_back(number());
      } else if (c == 'o' && pos_ + 1 < in_.size() && operator_kind(in_[pos_ + 1])) {
        out.push_back({*operator_kind(in_[pos_ + 1]), std::string(in_.substr(pos_, 2)), col});
        advance(2);
      } else if (is_alpha(c)) {
        out.push_back(identifier());
      } else if (auto kind = unicode_operator()) {
        out.push_back({*kind, std::string(in_.substr(pos_, 3)), col});
        advance(3);
      } else {
        throw LexError("unexpected character", col);
      }
    }
    return out;
  }

private:
  static std::optional<TokenKind> operator_kind(char c) {
    switch (c) {
      case '+': return TokenKind::QPlus;
      case '-': return TokenKind::QMinus;
      case '*': return TokenKind::QTimes;
      case '/': return TokenKind::QDiv;
      default: return std::nullopt;
    }
  }

  // U+2295..U+2298 encode as E2 8A 95..98.
  std::optional<TokenKind> unicode_operator() const {
    if (pos_ + 3 > in_.size()) return std::nullopt;
    const auto b0 = static_cast<unsigned char>(in_[pos_]);
    const auto b1 = static_cast<unsigned char>(in_[pos_ + 1]);
    const auto b2 = static_cast<unsigned char>(in_[pos_ + 2]);
    if (b0 != 0xE2 || b1 != 0x8A) return std::nullopt;
    switch (b2) {
      case 0x95: return TokenKind::QPlus;
      case 0x96: return TokenKind::QMinus;
      case 0x97: return TokenKind::QTimes;
      case 0x98: return TokenKind::QDiv;
      default: return std::nullopt;
    }
  }

  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes && pos_ < in_.size(); ++i, ++pos_) {
      if ((static_cast<unsigned char>(in_[pos_]) & 0xC0) != 0x80) ++column_;
    }
  }

  void digits() {
    while (pos_ < in_.size() && is_digit(in_[pos_])) advance(1);
  }

  Token number() {
    const std::size_t start = pos_;
    const std::size_t col = column_;
    if (in_[pos_] == '-') advance(1);
    digits();
    if (pos_ < in_.size() && (in_[pos_] == '.' || in_[pos_] == '/')) {
      const char sep = in_[pos_];
      advance(1);
      if (pos_ >= in_.size() || !is_digit(in_[pos_])) {
        throw LexError(std::string("expected digits after '") + sep + "'", column_);
      }
      digits();
    }
    std::string lexeme(in_.substr(start, pos_ - start));
    try {
      (void)Rational::parse(lexeme);
    } catch (const std::exception& e) {
      throw LexError(e.what(), col);
    }
    return {TokenKind::Number, std::move(lexeme), col};
  }

  Token identifier() {
    const std::size_t start = pos_;
    const std::size_t col = column_;
    while (pos_ < in_.size() && is_alpha(in_[pos_])) advance(1);
    std::string name(in_.substr(start, pos_ - start));
    if (name != "qexp" && name != "qlog" && name != "dn") {
      throw LexError("unknown function '" + name + "'", col);
    }
    return {TokenKind::FuncName, std::move(name), col};
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t column_ = 1;
};

std::size_t codepoints(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

class Parser {
public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (pos_ != tokens_.size()) fail("expected end of input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t col = 1;
    if (pos_ < tokens_.size()) {
      col = tokens_[pos_].column;
    } else if (!tokens_.empty()) {
      col = tokens_.back().column + codepoints(tokens_.back().lexeme);
    }
    throw ParseError(what, col);
  }

  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  bool accept(TokenKind kind) {
    if (peek() && peek()->kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (true) {
      if (accept(TokenKind::QPlus)) {
        left = make_binary(BinaryOp::QPlus, std::move(left), term());
      } else if (accept(TokenKind::QMinus)) {
        left = make_binary(BinaryOp::QMinus, std::move(left), term());
      } else {
        return left;
      }
    }
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (true) {
      if (accept(TokenKind::QTimes)) {
        left = make_binary(BinaryOp::QTimes, std::move(left), factor());
      } else if (accept(TokenKind::QDiv)) {
        left = make_binary(BinaryOp::QDiv, std::move(left), factor());
      } else {
        return left;
      }
    }
  }

  ExprPtr factor() {
    const Token* t = peek();
    if (!t) fail("expected factor");
    switch (t->kind) {
      case TokenKind::Number:
        ++pos_;
        return make_literal(Rational::parse(t->lexeme));
      case TokenKind::LParen: {
        ++pos_;
        ExprPtr inner = expr();
        if (!accept(TokenKind::RParen)) fail("expected ')'");
        return inner;
      }
      case TokenKind::FuncName: {
        ++pos_;
        const Func f = t->lexeme == "qexp" ? Func::QExp : (t->lexeme == "qlog" ? Func::QLog : Func::Deformed);
        if (!accept(TokenKind::LParen)) fail("expected '(' after function name");
        ExprPtr arg = expr();
        if (!accept(TokenKind::RParen)) fail("expected ')'");
        return make_call(f, std::move(arg));
      }
      default:
        fail("expected factor");
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

int precedence(BinaryOp op) {
  return (op == BinaryOp::QPlus || op == BinaryOp::QMinus) ? 1 : 2;
}

const char* spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::QPlus: return "o+";
    case BinaryOp::QMinus: return "o-";
    case BinaryOp::QTimes: return "o*";
    case BinaryOp::QDiv: return "o/";
  }
  return "?";
}

const char* spelling(Func f) {
  switch (f) {
    case Func::QExp: return "qexp";
    case Func::QLog: return "qlog";
    case Func::Deformed: return "dn";
  }
  return "?";
}

std::string print(const ExprNode& n, int parent_prec, bool right_operand) {
  if (const auto* lit = std::get_if<Literal>(&n.node)) return lit->value.str();
  if (const auto* call = std::get_if<Call>(&n.node)) {
    return std::string(spelling(call->func)) + "(" + print(*call->arg, 0, false) + ")";
  }
  const auto& bin = std::get<Binary>(n.node);
  const int prec = precedence(bin.op);
  std::string s = print(*bin.left, prec, false) + " " + spelling(bin.op) + " " + print(*bin.right, prec, true);
  if (prec < parent_prec || (prec == parent_prec && right_operand)) return "(" + s + ")";
  return s;
}

} // namespace

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

ExprPtr make_literal(Rational value) {
  return std::make_unique<ExprNode>(ExprNode{Literal{std::move(value)}});
}

ExprPtr make_binary(BinaryOp op, ExprPtr left, ExprPtr right) {
  return std::make_unique<ExprNode>(ExprNode{Binary{op, std::move(left), std::move(right)}});
}

ExprPtr make_call(Func func, ExprPtr arg) {
  return std::make_unique<ExprNode>(ExprNode{Call{func, std::move(arg)}});
}

bool operator==(const ExprNode& a, const ExprNode& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* la = std::get_if<Literal>(&a.node)) return la->value == std::get<Literal>(b.node).value;
  if (const auto* ca = std::get_if<Call>(&a.node)) {
    const auto& cb = std::get<Call>(b.node);
    return ca->func == cb.func && *ca->arg == *cb.arg;
  }
  const auto& ba = std::get<Binary>(a.node);
  const auto& bb = std::get<Binary>(b.node);
  return ba.op == bb.op && *ba.left == *bb.left && *ba.right == *bb.right;
}

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ExprPtr parse(std::string_view input) { return parse(tokenize(input)); }

std::string to_string(const ExprNode& node) { return print(node, 0, false); }

bool is_rational_closed(const ExprNode& node) {
  if (std::holds_alternative<Literal>(node.node)) return true;
  if (std::holds_alternative<Call>(node.node)) return false;
  const auto& bin = std::get<Binary>(node.node);
  return (bin.op == BinaryOp::QPlus || bin.op == BinaryOp::QMinus) && is_rational_closed(*bin.left) &&
         is_rational_closed(*bin.right);
}

Rational evaluate_exact(const ExprNode& node, const QParam& q) {
  if (const auto* lit = std::get_if<Literal>(&node.node)) return lit->value;
  if (const auto* call = std::get_if<Call>(&node.node)) {
    throw ModeError(std::string("exact mode cannot evaluate ") + spelling(call->func) + "()");
  }
  const auto& bin = std::get<Binary>(node.node);
  switch (bin.op) {
    case BinaryOp::QPlus: return q_sum(evaluate_exact(*bin.left, q), evaluate_exact(*bin.right, q), q);
    case BinaryOp::QMinus: return q_diff(evaluate_exact(*bin.left, q), evaluate_exact(*bin.right, q), q);
    default: throw ModeError(std::string("exact mode cannot evaluate ") + spelling(bin.op));
  }
}

double evaluate_float(const ExprNode& node, const QParam& q) {
  if (const auto* lit = std::get_if<Literal>(&node.node)) return lit->value.to_double();
  if (const auto* call = std::get_if<Call>(&node.node)) {
    const double x = evaluate_float(*call->arg, q);
    switch (call->func) {
      case Func::QExp: return q_exp(x, q);
      case Func::QLog: return q_log(x, q);
      case Func::Deformed: return deformed(x, q);
    }
  }
  const auto& bin = std::get<Binary>(node.node);
  const double l = evaluate_float(*bin.left, q);
  const double r = evaluate_float(*bin.right, q);
  switch (bin.op) {
    case BinaryOp::QPlus: return q_sum(l, r, q);
    case BinaryOp::QMinus: return q_diff(l, r, q);
    case BinaryOp::QTimes: return q_prod(l, r, q);
    case BinaryOp::QDiv: return q_div(l, r, q);
  }
  return 0.0;
}

Value evaluate(const ExprNode& node, const QParam& q, EvalMode mode) {
  if (mode == EvalMode::Exact) return evaluate_exact(node, q);
  return evaluate_float(node, q);
}

} // namespace qvitali
