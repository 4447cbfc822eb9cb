#include "crclass/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "crclass/errors.hpp"

namespace crclass {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n, int c) : text_(text), n_(n), c_(c) {}

  RationalExpr parse() {
    skip_space();
    RationalExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail(ParseError::Kind::Syntax, pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(ParseError::Kind kind, std::size_t at, const std::string& what) const {
    throw ParseError(kind, at, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalExpr expr() {
    RationalExpr acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalExpr term() {
    RationalExpr acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_ - 1;
        RationalExpr rhs = unary();
        if (rhs.is_zero()) fail(ParseError::Kind::Syntax, at, "division by zero");
        acc /= rhs;
      } else {
        return acc;
      }
    }
  }

  RationalExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalExpr power() {
    RationalExpr base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(ParseError::Kind::Syntax, at, "expected a nonnegative integer exponent");
    }
    const std::string digits = read_digits();
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
      fail(ParseError::Kind::ExponentOverflow, at, "exponent " + digits + " exceeds " + std::to_string(kMaxExponent));
    }
    if (accept('^')) fail(ParseError::Kind::Syntax, pos_ - 1, "chained '^' is ambiguous; use parentheses");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RationalExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, pos_, "unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const mpq_class q{mpz_class(read_digits())};
      return RationalExpr(GaussianRational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return identifier(text_.substr(start, pos_ - start), start);
    }
    if (ch == '(') {
      ++pos_;
      RationalExpr inner = expr();
      if (!accept(')')) fail(ParseError::Kind::Syntax, pos_, "expected ')'");
      return inner;
    }
    fail(ParseError::Kind::Syntax, pos_, "unexpected '" + std::string(1, ch) + "'");
  }

  RationalExpr identifier(std::string_view name, std::size_t at) const {
    if (name == "I") return RationalExpr(GaussianRational::i());
    if (auto v = lookup(name)) return RationalExpr::variable(*v);
    fail(ParseError::Kind::UnknownVariable, at, "unknown variable '" + std::string(name) + "'");
  }

  std::optional<VarId> lookup(std::string_view name) const {
    auto indexed = [&](std::string_view prefix, VarKind kind, int bound) -> std::optional<VarId> {
      if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
      std::string_view rest = name.substr(prefix.size());
      if (rest.empty()) {
        if (bound == 1) return VarId{kind, 1};
        return std::nullopt;
      }
      if (rest.size() != 1 || !std::isdigit(static_cast<unsigned char>(rest[0]))) return std::nullopt;
      const int k = rest[0] - '0';
      if (k < 1 || k > bound) return std::nullopt;
      return VarId{kind, k};
    };
    if (name.substr(0, 2) == "zb") return indexed("zb", VarKind::Zbar, n_);
    if (name.substr(0, 1) == "z") return indexed("z", VarKind::Z, n_);
    if (name.substr(0, 1) == "u") return indexed("u", VarKind::U, c_);
    return std::nullopt;
  }

  std::string_view text_;
  int n_;
  int c_;
  std::size_t pos_{0};
};

}  // namespace

RationalExpr parse_expr(std::string_view text, int n, int c) { return Parser(text, n, c).parse(); }

GaussianRational parse_number(std::string_view text) {
  RationalExpr e = Parser(text, 0, 0).parse();
  if (!e.is_constant()) throw ParseError(ParseError::Kind::Syntax, 0, "expected a number");
  return e.constant_value();
}

}  // namespace crclass
