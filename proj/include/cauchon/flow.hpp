#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cauchon/matrix.hpp"
#include "cauchon/poisson.hpp"
#include "cauchon/rat.hpp"

namespace cauchon {

// Finite sums c * t^k * exp(lambda t) with rational c and lambda. Closed under
// +, *, d/dt, so flow residuals can be decided exactly.
class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(const Rat& c);  // NOLINT: constants convert implicitly
  static ExpPoly t();
  static ExpPoly exp_of(const ExpPoly& arg);  // arg must be lambda * t

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

  ExpPoly derivative() const;
  long double eval(long double t) const;
  std::string to_string() const;

 private:
  void add(const Rat& lambda, int k, const Rat& c);
  // (lambda, k) -> c
  std::map<std::pair<Rat, int>, Rat> terms_;
};

// Each matrix entry of a path t -> gamma(t) as an expression in t.
struct FlowPath {
  std::size_t m = 0;
  std::size_t p = 0;
  std::map<std::string, Rat> params;  // as read from the input
  Matrix<ExpPoly> entries;
};

// Expressions use t, integers, + - * /, integer powers, exp(lambda*t) and
// named rational parameters. Division only by constants.
ExpPoly parse_exp_poly(const std::string& text, const std::map<std::string, Rat>& params = {});

struct FlowResidual {
  bool exact_zero = false;
  long double max_numeric = 0;  // over the sample grid
  std::vector<std::string> residuals;  // row-major, exact
};

// For every coordinate Y[i,a]: d/dt(Y[i,a] o gamma) - {H, Y[i,a]} o gamma.
FlowResidual verify_flow(const FlowPath& path, const MPoly& h, const PoissonRing& ring, int samples = 100);

}  // namespace cauchon
