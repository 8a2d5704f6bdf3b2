#pragma once

#include <concepts>

#include "cauchon/rat.hpp"

namespace cauchon {

// An exact field-like domain: ring operations, division by nonzero elements
// and a decidable zero test found by ADL. Rat, RatFunc and Zp model it.
template <class S>
concept ScalarDomain = std::copyable<S> && requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

}  // namespace cauchon
