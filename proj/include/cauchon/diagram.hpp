#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cauchon/guard.hpp"

namespace cauchon {

// A grid position, 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// An m x p black/white filling with no condition imposed.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t m, std::size_t p);
  Grid(std::size_t m, std::size_t p, const std::vector<Cell>& black);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return p_; }
  bool black(int row, int col) const { return cells_[index(row, col)] != 0; }
  void set_black(int row, int col, bool value = true) { cells_[index(row, col)] = value ? 1 : 0; }

  std::vector<Cell> black_cells() const;
  std::vector<Cell> white_cells() const;
  // Bit (i-1)*p + (j-1) is set iff (i, j) is black.
  std::uint64_t mask() const;
  Grid transpose() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int row, int col) const;
  std::size_t m_ = 0;
  std::size_t p_ = 0;
  std::vector<std::uint8_t> cells_;
};

// The Cauchon (equivalently Le) condition: every black square has an all-black
// row segment strictly to its left or an all-black column segment strictly
// above it.
bool is_cauchon(const Grid& g);
bool is_cauchon(std::size_t m, std::size_t p, const std::vector<Cell>& black);

// A grid known to satisfy the Cauchon condition.
class CauchonDiagram {
 public:
  static CauchonDiagram from_grid(Grid g);
  static CauchonDiagram from_black(std::size_t m, std::size_t p, const std::vector<Cell>& black);
  static CauchonDiagram all_white(std::size_t m, std::size_t p);
  static CauchonDiagram all_black(std::size_t m, std::size_t p);

  std::size_t rows() const { return grid_.rows(); }
  std::size_t cols() const { return grid_.cols(); }
  bool black(int row, int col) const { return grid_.black(row, col); }
  bool white(int row, int col) const { return !grid_.black(row, col); }
  const Grid& grid() const { return grid_; }
  std::vector<Cell> black_cells() const { return grid_.black_cells(); }
  std::vector<Cell> white_cells() const { return grid_.white_cells(); }
  std::uint64_t mask() const { return grid_.mask(); }
  CauchonDiagram transpose() const { return CauchonDiagram(grid_.transpose()); }

  friend bool operator==(const CauchonDiagram&, const CauchonDiagram&) = default;

 private:
  explicit CauchonDiagram(Grid g) : grid_(std::move(g)) {}
  Grid grid_;
};

// Every m x p Cauchon diagram exactly once, ascending by mask(). Built by
// row-major backtracking with the condition checked as cells are placed.
std::vector<CauchonDiagram> enumerate_diagrams(std::size_t m, std::size_t p);
void for_each_diagram(std::size_t m, std::size_t p, const std::function<void(const CauchonDiagram&)>& fn);

// All fillings that violate the condition, ascending by mask.
std::vector<Grid> non_le_fillings(std::size_t m, std::size_t p, const Guard& guard = Guard::from_env());

// Canonical text: one line per row, '#' black and '.' white.
std::string to_ascii(const Grid& g);
inline std::string to_ascii(const CauchonDiagram& d) { return to_ascii(d.grid()); }
// Le 0/1 notation, 0 = black.
std::string to_le(const Grid& g);
// Accepts the '.'/'#' form or the Le 0/1 form; blank lines ignored.
Grid parse_grid_text(const std::string& text);

}  // namespace cauchon
