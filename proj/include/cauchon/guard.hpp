#pragma once

#include <cstddef>
#include <string>

namespace cauchon {

// Size limits (in cells, m * p) for exhaustive work. CAUCHON_GUARD=N in the
// environment raises or lowers all of them to N.
struct Guard {
  std::size_t exact_cells = 12;          // symbolic vanishing families
  std::size_t probabilistic_cells = 16;  // mod-p families, M(w) tables
  std::size_t filling_cells = 20;        // brute force over 2^(mp) fillings

  static Guard from_env();
  void require_exact(std::size_t m, std::size_t p, const std::string& what) const;
  void require_probabilistic(std::size_t m, std::size_t p, const std::string& what) const;
};

}  // namespace cauchon
