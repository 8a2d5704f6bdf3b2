#pragma once

#include <cstddef>
#include <string_view>

#include "cauchon/mpoly.hpp"

namespace cauchon {

// Coordinate ring of m x p matrices, variables Y[i,j] row-major (a, b, c, d
// when 2 x 2).
class PoissonRing {
 public:
  PoissonRing(std::size_t m, std::size_t p);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return p_; }
  const VarsPtr& vars() const { return vars_; }
  MPoly coordinate(int i, int a) const;
  // Y[i,a] spelled either way; a..d also accepted at 2 x 2.
  MPoly parse(std::string_view text) const;

  // {Y_u, Y_v} for generator ids u, v (0-based row-major). For (i,a) < (k,c):
  // same row or column gives Y_u Y_v, a > c gives 0, a < c gives 2 Y[i,c] Y[k,a].
  MPoly generator_bracket(std::size_t u, std::size_t v) const;

  // Extended from the table by bilinearity and the Leibniz rule.
  MPoly bracket(const MPoly& f, const MPoly& g) const;
  // {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
  MPoly jacobi(const MPoly& f, const MPoly& g, const MPoly& h) const;

 private:
  std::size_t m_, p_;
  VarsPtr vars_;
};

struct SemiclassicalResult {
  bool agrees = false;
  MPoly from_quantum;  // ([X_u, X_v] / (q - 1)) at q = 1, with X -> Y
  MPoly from_table;    // {Y_u, Y_v}
};

// Throws InvariantError if (q - 1) fails to divide a commutator coefficient.
SemiclassicalResult semiclassical_check(std::size_t m, std::size_t p, int i, int a, int k, int c);

}  // namespace cauchon
