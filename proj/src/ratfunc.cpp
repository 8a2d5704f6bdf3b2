#include "cauchon/ratfunc.hpp"

#include <algorithm>

#include "cauchon/error.hpp"
#include "cauchon/zp.hpp"

namespace cauchon {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.vars(), 1);
    return;
  }
  Exponent g = num_.monomial_content();
  const Exponent dg = den_.monomial_content();
  bool any = false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    g[v] = std::min(g[v], dg[v]);
    any = any || g[v] > 0;
  }
  if (any) {
    num_ = num_.divide_monomial(g);
    den_ = den_.divide_monomial(g);
  }
  BigInt c;
  const BigInt nc = num_.integer_content(), dc = den_.integer_content();
  mpz_gcd(c.get_mpz_t(), nc.get_mpz_t(), dc.get_mpz_t());
  if (den_.leading_coefficient() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divide_exact(c);
    den_ = den_.divide_exact(c);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.num_.is_zero() || b.num_.is_zero()) return RatFunc(MPoly(a.num_.vars()));
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::optional<std::uint64_t> RatFunc::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t prime) const {
  const std::uint64_t d = den_.eval_mod(point, prime);
  if (d == 0) return std::nullopt;
  return mulmod(num_.eval_mod(point, prime), powmod(d, prime - 2, prime), prime);
}

std::optional<Rat> RatFunc::eval(const std::vector<Rat>& point) const {
  Rat d = den_.eval(point);
  if (sgn(d) == 0) return std::nullopt;
  return Rat(num_.eval(point) / d);
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.leading_coefficient() == 1) return num_.to_string();
  auto wrap = [](const MPoly& f) {
    const std::string s = f.to_string();
    return f.term_count() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace cauchon
