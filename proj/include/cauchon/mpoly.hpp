#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cauchon/rat.hpp"

namespace cauchon {

using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;
using Exponent = std::vector<int>;

VarsPtr make_vars(VarList names);
// Row-major matrix coordinates "prefix[i,j]". When alias_2x2 is set and the
// shape is 2 x 2 the names are a, b, c, d instead.
VarsPtr matrix_vars(const std::string& prefix, std::size_t m, std::size_t p, bool alias_2x2 = false);

// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
// Terms are keyed by exponent vector; zero coefficients are never stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(VarsPtr vars);

  static MPoly constant(VarsPtr vars, const BigInt& c);
  static MPoly variable(VarsPtr vars, std::size_t index);
  static MPoly variable(VarsPtr vars, const std::string& name);
  static MPoly monomial(VarsPtr vars, Exponent e, const BigInt& c = 1);

  const VarsPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<std::size_t> var_index(const std::string& name) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& b);
  MPoly scaled(const BigInt& c) const;
  MPoly pow(unsigned k) const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly partial_derivative(std::size_t index) const;
  MPoly partial_derivative(const std::string& name) const;

  // Componentwise minimum exponent over all terms (zeros for the zero poly).
  Exponent monomial_content() const;
  // gcd of all coefficients (0 for the zero poly).
  BigInt integer_content() const;
  MPoly divide_monomial(const Exponent& e) const;
  MPoly divide_exact(const BigInt& c) const;
  // Coefficient of the largest exponent in lexicographic order.
  const BigInt& leading_coefficient() const;

  // Exact evaluation in Z/prime; the point must cover every variable.
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t prime) const;
  Rat eval(const std::vector<Rat>& point) const;

  // Substitutes values of any commutative ring T for the variables.
  template <class T>
  T substitute(const std::vector<T>& values, const T& zero, const T& one) const;

  std::string to_string() const;

 private:
  void require_compatible(const MPoly& other) const;
  VarsPtr vars_;
  std::map<Exponent, BigInt> terms_;
};

inline bool is_zero(const MPoly& f) { return f.is_zero(); }

// Evaluation in Z/prime (any prime below 2^63).
std::uint64_t eval_mod_p(const MPoly& f, const std::vector<std::uint64_t>& point, std::uint64_t prime);

template <class T>
T MPoly::substitute(const std::vector<T>& values, const T& zero, const T& one) const {
  T acc = zero;
  for (const auto& [e, c] : terms_) {
    T term = one;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term = term * values.at(v);
    acc = acc + term * T(Rat(c));
  }
  return acc;
}

}  // namespace cauchon
