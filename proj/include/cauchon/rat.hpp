#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cauchon {

using BigInt = mpz_class;
// Arithmetic keeps mpq_class canonical; the two-argument constructor does not,
// so build fractions with frac().
using Rat = mpq_class;

// Parses "-3/2", "7", "+4" or "0.25"; throws DomainError on anything else or
// on a zero denominator.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);

inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace cauchon
