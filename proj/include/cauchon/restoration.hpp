#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cauchon/diagram.hpp"
#include "cauchon/exactmat.hpp"
#include "cauchon/guard.hpp"
#include "cauchon/matrix.hpp"
#include "cauchon/minors.hpp"
#include "cauchon/ratfunc.hpp"
#include "cauchon/scalar.hpp"

namespace cauchon {

// Pivot position (j, beta), 1-based, ordered lexicographically.
struct StepIndex {
  int j = 1;
  int beta = 1;
  friend auto operator<=>(const StepIndex&, const StepIndex&) = default;
};

// Next / previous step in lexicographic order. The successor of (m, p) is the
// end marker, reported as nullopt; likewise the predecessor of (1, 1).
std::optional<StepIndex> successor(StepIndex s, std::size_t m, std::size_t p);
std::optional<StepIndex> predecessor(StepIndex s, std::size_t m, std::size_t p);

namespace detail {
template <ScalarDomain T>
Matrix<T> pivot_step(Matrix<T> a, int j, int beta, bool add) {
  if (j < 1 || beta < 1 || static_cast<std::size_t>(j) > a.rows() || static_cast<std::size_t>(beta) > a.cols())
    throw DomainError("step (" + std::to_string(j) + "," + std::to_string(beta) + ") outside the matrix");
  const T& pivot = a(j - 1, beta - 1);
  if (is_zero(pivot)) return a;
  // Row j and column beta are read but never written, so in-place is safe.
  for (int i = 1; i < j; ++i) {
    const T& xib = a(i - 1, beta - 1);
    if (is_zero(xib)) continue;
    for (int al = 1; al < beta; ++al) {
      const T& xja = a(j - 1, al - 1);
      if (is_zero(xja)) continue;
      T corr = xib * xja / pivot;
      T& x = a(i - 1, al - 1);
      x = add ? T(x + corr) : T(x - corr);
    }
  }
  return a;
}
}  // namespace detail

// x_{i,a} - x_{i,beta} x_{j,beta}^{-1} x_{j,a} for i < j, a < beta, when the
// pivot x_{j,beta} is nonzero; the identity otherwise.
template <ScalarDomain T>
Matrix<T> delete_step(const Matrix<T>& a, int j, int beta) {
  return detail::pivot_step(a, j, beta, false);
}

// Same with + in place of -.
template <ScalarDomain T>
Matrix<T> restore_step(const Matrix<T>& a, int j, int beta) {
  return detail::pivot_step(a, j, beta, true);
}

template <class T>
struct TraceEntry {
  StepIndex step;
  Matrix<T> after;
};

// Steps (m,p), (m,p-1), ..., (1,1).
template <ScalarDomain T>
Matrix<T> deleting_derivations(Matrix<T> a, std::vector<TraceEntry<T>>* trace = nullptr) {
  for (int j = static_cast<int>(a.rows()); j >= 1; --j)
    for (int b = static_cast<int>(a.cols()); b >= 1; --b) {
      a = delete_step(a, j, b);
      if (trace) trace->push_back({{j, b}, a});
    }
  return a;
}

// Steps (1,1), (1,2), ..., (m,p).
template <ScalarDomain T>
Matrix<T> restoration(Matrix<T> a, std::vector<TraceEntry<T>>* trace = nullptr) {
  for (int j = 1; j <= static_cast<int>(a.rows()); ++j)
    for (int b = 1; b <= static_cast<int>(a.cols()); ++b) {
      a = restore_step(a, j, b);
      if (trace) trace->push_back({{j, b}, a});
    }
  return a;
}

struct TnnTestResult {
  bool is_tnn = false;
  std::optional<CauchonDiagram> diagram;
  RatMatrix final;
  // Why the verdict is negative: a negative entry, or a zero pattern that is
  // not a Cauchon diagram.
  std::string reason;
};

// M is TNN iff the deleting-derivations output is entrywise nonnegative and its
// zeros form a Cauchon diagram.
TnnTestResult tnn_test(const RatMatrix& a);

// Restoration of the matrix that is zero on black cells and `seeds` on white
// cells. A zero seed on a white cell is rejected.
template <ScalarDomain T>
Matrix<T> build_TC(const CauchonDiagram& c, const Matrix<T>& seeds, const T& zero) {
  if (seeds.rows() != c.rows() || seeds.cols() != c.cols())
    throw DomainError("seed matrix shape does not match the diagram");
  Matrix<T> t(c.rows(), c.cols(), zero);
  for (int i = 1; i <= static_cast<int>(c.rows()); ++i)
    for (int a = 1; a <= static_cast<int>(c.cols()); ++a) {
      if (c.black(i, a)) continue;
      if (is_zero(seeds(i - 1, a - 1)))
        throw DomainError("white cell (" + std::to_string(i) + "," + std::to_string(a) + ") seeded with zero");
      t(i - 1, a - 1) = seeds(i - 1, a - 1);
    }
  return restoration(std::move(t));
}

// T_C with every white cell seeded by the same rational (default 1).
RatMatrix rational_TC(const CauchonDiagram& c, const Rat& value = 1);

// T_C with white cell (i,a) seeded by the indeterminate t[i,a]. Variables are
// declared for every cell in row-major order.
Matrix<RatFunc> symbolic_TC(const CauchonDiagram& c);

enum class ZeroTest { Exact, Probabilistic };

struct VanishingOptions {
  ZeroTest backend = ZeroTest::Exact;
  // Exact backend only: confirm just the minors that vanish at every random
  // point instead of expanding all of them symbolically.
  bool prefilter = true;
  int points = 20;
  unsigned long long seed = 0x5eed;
  Guard guard = Guard::from_env();
};

// Minors of the symbolic T_C that are identically zero.
MinorFamily vanishing_family(const CauchonDiagram& c, const VanishingOptions& opt = {});

}  // namespace cauchon
