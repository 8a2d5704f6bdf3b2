#pragma once

#include <map>
#include <string>

#include "cauchon/rat.hpp"

namespace cauchon {

// Laurent polynomial in the formal parameter q with integer coefficients.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long c) { if (c != 0) coeffs_.emplace(0, BigInt(c)); }  // NOLINT: implicit scalar
  LaurentQ(const BigInt& c) { if (c != 0) coeffs_.emplace(0, c); }  // NOLINT

  // c * q^k
  static LaurentQ monomial(int k, const BigInt& c = 1);
  static LaurentQ q() { return monomial(1); }

  const std::map<int, BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int k) const;

  LaurentQ operator-() const;
  friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  LaurentQ& operator+=(const LaurentQ& b);
  friend bool operator==(const LaurentQ&, const LaurentQ&) = default;

  // Multiplicative inverse of a single term c * q^k (|c| = 1); throws otherwise.
  LaurentQ inverse_of_unit() const;
  LaurentQ pow(int k) const;

  // Value at q = 1 (the sum of the coefficients).
  BigInt at_one() const;
  // Exact quotient by (q - 1); throws InvariantError when (q - 1) does not divide.
  LaurentQ divide_by_q_minus_one() const;

  std::string to_string() const;

 private:
  std::map<int, BigInt> coeffs_;
};

inline bool is_zero(const LaurentQ& f) { return f.is_zero(); }

}  // namespace cauchon
