#include "cauchon/expr.hpp"

#include <cctype>

namespace cauchon {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("parse error at column " + std::to_string(pos_ + 1) + " of \"" + std::string(s_) + "\": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  static Expr binary(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (eat('+'))
        lhs = binary(Expr::Kind::Add, std::move(lhs), term());
      else if (eat('-'))
        lhs = binary(Expr::Kind::Sub, std::move(lhs), term());
      else
        return lhs;
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      if (eat('*'))
        lhs = binary(Expr::Kind::Mul, std::move(lhs), factor());
      else if (eat('/'))
        lhs = binary(Expr::Kind::Div, std::move(lhs), factor());
      else if (starts_primary())
        lhs = binary(Expr::Kind::Mul, std::move(lhs), factor());
      else
        return lhs;
    }
  }

  Expr factor() {
    if (eat('-')) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.args.push_back(factor());
      return e;
    }
    if (eat('+')) return factor();
    return power();
  }

  long integer_literal() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  long signed_exponent() {
    if (eat('(')) {
      const long v = eat('-') ? -integer_literal() : integer_literal();
      expect(')');
      return v;
    }
    return eat('-') ? -integer_literal() : integer_literal();
  }

  Expr power() {
    Expr base = primary();
    if (eat('^')) {
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.exponent = signed_exponent();
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Expr e;
      e.kind = Expr::Kind::Integer;
      e.integer = BigInt(std::string(s_.substr(start, pos_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      Expr e;
      e.name = std::string(s_.substr(start, pos_ - start));
      if (e.name == "exp") {
        e.kind = Expr::Kind::Call;
        expect('(');
        e.args.push_back(expr());
        expect(')');
        return e;
      }
      e.kind = Expr::Kind::Symbol;
      if (pos_ < s_.size() && s_[pos_] == '[') {
        ++pos_;
        const long i = integer_literal();
        expect(',');
        const long j = integer_literal();
        expect(']');
        e.index = std::make_pair(static_cast<int>(i), static_cast<int>(j));
      }
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace cauchon

#include "cauchon/symfun.hpp"

namespace cauchon {

MPoly parse_mpoly(std::string_view text, const VarsPtr& vars) {
  Semantics<MPoly> sem;
  sem.integer = [&](const BigInt& v) { return MPoly::constant(vars, v); };
  sem.symbol = [&](const Expr& e) {
    std::string name = e.name;
    if (e.index) name += "[" + std::to_string(e.index->first) + "," + std::to_string(e.index->second) + "]";
    return MPoly::variable(vars, name);
  };
  sem.power = [&](const MPoly& base, long k) {
    if (k < 0) throw DomainError("negative powers are not polynomial");
    return base.pow(static_cast<unsigned>(k));
  };
  return evaluate(parse_expression(text), sem);
}

}  // namespace cauchon
