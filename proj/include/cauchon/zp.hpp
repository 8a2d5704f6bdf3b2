#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "cauchon/error.hpp"

namespace cauchon {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  return static_cast<std::uint64_t>(s % p);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t out = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) out = mulmod(out, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return out;
}

// Element of the prime field Z/P. P must be prime; division uses Fermat.
template <std::uint64_t P>
class Zp {
 public:
  static constexpr std::uint64_t modulus = P;

  constexpr Zp() = default;
  constexpr explicit Zp(std::uint64_t v) : v_(v % P) {}
  static Zp from_signed(std::int64_t v) {
    const auto m = static_cast<std::int64_t>(P);
    return Zp(static_cast<std::uint64_t>(((v % m) + m) % m));
  }

  std::uint64_t value() const { return v_; }

  friend Zp operator+(Zp a, Zp b) { return Zp(addmod(a.v_, b.v_, P)); }
  friend Zp operator-(Zp a, Zp b) { return Zp(addmod(a.v_, P - b.v_, P)); }
  friend Zp operator*(Zp a, Zp b) { return Zp(mulmod(a.v_, b.v_, P)); }
  friend Zp operator/(Zp a, Zp b) {
    if (b.v_ == 0) throw DomainError("division by zero in Z/p");
    return a * Zp(powmod(b.v_, P - 2, P));
  }
  Zp operator-() const { return Zp(v_ == 0 ? 0 : P - v_); }
  friend bool operator==(Zp a, Zp b) = default;
  friend bool is_zero(Zp a) { return a.v_ == 0; }

  template <class Rng>
  static Zp random_nonzero(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, P - 1);
    return Zp(dist(rng));
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint64_t v_ = 0;
};

// The field used by the probabilistic zero-test backend (2^31 - 1).
using Fp = Zp<2147483647ULL>;

}  // namespace cauchon
