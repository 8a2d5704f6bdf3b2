#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cauchon/error.hpp"
#include "cauchon/rat.hpp"

namespace cauchon {

// Syntax tree for the small expression language shared by the polynomial,
// quantum and flow front ends:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/')? factor)*      juxtaposition multiplies
//   factor  := '-' factor | power
//   power   := primary ('^' ['-'] int | '^' '(' ['-'] int ')')?
//   primary := int | name ['[' int ',' int ']'] | 'exp' '(' expr ')' | '(' expr ')'
//
// Products keep their written order, so noncommutative targets see a*b and
// b*a differently.
struct Expr {
  enum class Kind { Integer, Symbol, Add, Sub, Mul, Div, Neg, Pow, Call };
  Kind kind = Kind::Integer;
  BigInt integer;
  std::string name;
  std::optional<std::pair<int, int>> index;
  long exponent = 0;
  std::vector<Expr> args;
};

Expr parse_expression(std::string_view text);

template <class T>
struct Semantics {
  std::function<T(const BigInt&)> integer;
  std::function<T(const Expr&)> symbol;
  // Defaults: positive powers by repeated multiplication; others rejected.
  std::function<T(const T&, long)> power;
  std::function<T(const T&, const T&)> divide;
  std::function<T(const std::string&, const T&)> call;
};

template <class T>
T evaluate(const Expr& e, const Semantics<T>& sem) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return sem.integer(e.integer);
    case Expr::Kind::Symbol:
      return sem.symbol(e);
    case Expr::Kind::Add:
      return evaluate(e.args[0], sem) + evaluate(e.args[1], sem);
    case Expr::Kind::Sub:
      return evaluate(e.args[0], sem) - evaluate(e.args[1], sem);
    case Expr::Kind::Mul:
      return evaluate(e.args[0], sem) * evaluate(e.args[1], sem);
    case Expr::Kind::Neg:
      return -evaluate(e.args[0], sem);
    case Expr::Kind::Div:
      if (!sem.divide) throw DomainError("division is not supported here");
      return sem.divide(evaluate(e.args[0], sem), evaluate(e.args[1], sem));
    case Expr::Kind::Call:
      if (!sem.call) throw DomainError("function '" + e.name + "' is not supported here");
      return sem.call(e.name, evaluate(e.args[0], sem));
    case Expr::Kind::Pow: {
      T base = evaluate(e.args[0], sem);
      if (sem.power) return sem.power(base, e.exponent);
      if (e.exponent < 1) throw DomainError("only positive integer powers are supported here");
      T out = base;
      for (long k = 1; k < e.exponent; ++k) out = out * base;
      return out;
    }
  }
  throw DomainError("malformed expression");
}

}  // namespace cauchon
