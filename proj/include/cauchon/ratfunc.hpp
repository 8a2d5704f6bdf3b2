#pragma once

#include <optional>
#include <string>

#include "cauchon/mpoly.hpp"

namespace cauchon {

// Quotient of two integer polynomials. Only the monomial and integer content
// is cancelled; no multivariate gcd is attempted. Zero iff the numerator is.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MPoly num);
  RatFunc(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const VarsPtr& vars() const { return num_.vars(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  // Mathematical equality (cross-multiplication), not representation equality.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  // nullopt when the denominator vanishes at the point ("retry elsewhere").
  std::optional<std::uint64_t> eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t prime) const;
  std::optional<Rat> eval(const std::vector<Rat>& point) const;

  std::string to_string() const;

 private:
  void normalize();
  MPoly num_;
  MPoly den_;
};

inline bool ratfunc_is_zero(const RatFunc& f) { return f.num().is_zero(); }
inline bool is_zero(const RatFunc& f) { return ratfunc_is_zero(f); }

}  // namespace cauchon
