#include "cauchon/laurent.hpp"

#include <sstream>

#include "cauchon/error.hpp"

namespace cauchon {

LaurentQ LaurentQ::monomial(int k, const BigInt& c) {
  LaurentQ out;
  if (c != 0) out.coeffs_.emplace(k, c);
  return out;
}

BigInt LaurentQ::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ out = *this;
  for (auto& [k, c] : out.coeffs_) c = -c;
  return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& b) {
  for (const auto& [k, c] : b.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out = a;
  out += b;
  return out;
}

LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out = a;
  out += -b;
  return out;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) out += LaurentQ::monomial(ka + kb, ca * cb);
  return out;
}

LaurentQ LaurentQ::inverse_of_unit() const {
  if (coeffs_.size() != 1 || abs(coeffs_.begin()->second) != 1)
    throw DomainError("only +-q^k is invertible among Laurent polynomials: " + to_string());
  return monomial(-coeffs_.begin()->first, coeffs_.begin()->second);
}

LaurentQ LaurentQ::pow(int k) const {
  if (k < 0) return inverse_of_unit().pow(-k);
  LaurentQ out(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

BigInt LaurentQ::at_one() const {
  BigInt s = 0;
  for (const auto& [k, c] : coeffs_) s += c;
  return s;
}

LaurentQ LaurentQ::divide_by_q_minus_one() const {
  if (coeffs_.empty()) return {};
  // Write f = q^lo * g with g an ordinary polynomial and divide g synthetically.
  const int lo = coeffs_.begin()->first;
  const int hi = coeffs_.rbegin()->first;
  LaurentQ out;
  BigInt carry = 0;
  for (int k = hi; k > lo; --k) {
    carry += coefficient(k);
    out += monomial(k - 1, carry);
  }
  if (carry + coefficient(lo) != 0)
    throw InvariantError("(q - 1) does not divide " + to_string());
  return out;
}

std::string LaurentQ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    BigInt mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (k != 1) os << '^' << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
  }
  return os.str();
}

}  // namespace cauchon
