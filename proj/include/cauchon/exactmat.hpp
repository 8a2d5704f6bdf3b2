#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cauchon/matrix.hpp"
#include "cauchon/minors.hpp"
#include "cauchon/rat.hpp"

namespace cauchon {

using RatMatrix = Matrix<Rat>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix zero_matrix(std::size_t m, std::size_t p);

// Exact minor by fraction-free Bareiss elimination over the integers, after
// clearing each row's denominators.
Rat minor(const RatMatrix& a, const MinorIndex& ix);

// Determinant of a square rational matrix (Bareiss).
Rat determinant(const RatMatrix& a);

// All C(m+p, m) - 1 minors, ordered by size, then rows, then columns.
std::vector<std::pair<MinorIndex, Rat>> all_minors(const RatMatrix& a);

// C(m+p, m) - 1, the number of minors of an m x p matrix.
BigInt minor_count(std::size_t m, std::size_t p);

// The n^2 initial minors of a square matrix, in row-major order of their
// bottom-right corner. The minor cornered at (i, j) has size min(i, j) and uses
// consecutive rows and columns ending at i and j.
std::vector<std::pair<MinorIndex, Rat>> initial_minors(const RatMatrix& a);

// Total positivity via the Gasca-Pena criterion: all initial minors > 0.
bool is_tp(const RatMatrix& a);

struct TnnVerdict {
  bool is_tnn = true;
  // Most negative minor (ties broken by canonical order), when not TNN.
  std::optional<MinorIndex> witness;
  std::optional<Rat> witness_value;
};

// Checks every minor.
TnnVerdict is_tnn_bruteforce(const RatMatrix& a);

// The exact set of vanishing minors of `a`.
MinorFamily vanishing_minors(const RatMatrix& a);

}  // namespace cauchon
