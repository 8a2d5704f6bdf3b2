#include "cauchon/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cauchon/error.hpp"

namespace cauchon {

Guard Guard::from_env() {
  Guard g;
  if (const char* env = std::getenv("CAUCHON_GUARD"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) g.exact_cells = g.probabilistic_cells = g.filling_cells = v;
  }
  return g;
}

void Guard::require_exact(std::size_t m, std::size_t p, const std::string& what) const {
  if (m * p > exact_cells)
    throw ResourceError(what + ": " + std::to_string(m) + "x" + std::to_string(p) +
                        " exceeds the exact guard of " + std::to_string(exact_cells) + " cells");
}

void Guard::require_probabilistic(std::size_t m, std::size_t p, const std::string& what) const {
  if (m * p > probabilistic_cells)
    throw ResourceError(what + ": " + std::to_string(m) + "x" + std::to_string(p) +
                        " exceeds the guard of " + std::to_string(probabilistic_cells) + " cells");
}

Grid::Grid(std::size_t m, std::size_t p) : m_(m), p_(p), cells_(m * p, 0) {
  if (m == 0 || p == 0) throw DomainError("a grid needs at least one row and one column");
}

Grid::Grid(std::size_t m, std::size_t p, const std::vector<Cell>& black) : Grid(m, p) {
  for (const auto& c : black) set_black(c.row, c.col);
}

std::size_t Grid::index(int row, int col) const {
  if (row < 1 || col < 1 || static_cast<std::size_t>(row) > m_ || static_cast<std::size_t>(col) > p_)
    throw DomainError("cell (" + std::to_string(row) + "," + std::to_string(col) + ") outside a " +
                      std::to_string(m_) + "x" + std::to_string(p_) + " grid");
  return (row - 1) * p_ + (col - 1);
}

std::vector<Cell> Grid::black_cells() const {
  std::vector<Cell> out;
  for (std::size_t k = 0; k < cells_.size(); ++k)
    if (cells_[k]) out.push_back({static_cast<int>(k / p_) + 1, static_cast<int>(k % p_) + 1});
  return out;
}

std::vector<Cell> Grid::white_cells() const {
  std::vector<Cell> out;
  for (std::size_t k = 0; k < cells_.size(); ++k)
    if (!cells_[k]) out.push_back({static_cast<int>(k / p_) + 1, static_cast<int>(k % p_) + 1});
  return out;
}

std::uint64_t Grid::mask() const {
  if (cells_.size() > 64) throw ResourceError("grid too large for a 64-bit mask");
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < cells_.size(); ++k)
    if (cells_[k]) out |= std::uint64_t{1} << k;
  return out;
}

Grid Grid::transpose() const {
  Grid out(p_, m_);
  for (const auto& c : black_cells()) out.set_black(c.col, c.row);
  return out;
}

bool is_cauchon(const Grid& g) {
  const int m = static_cast<int>(g.rows()), p = static_cast<int>(g.cols());
  for (int i = 1; i <= m; ++i) {
    for (int a = 1; a <= p; ++a) {
      if (!g.black(i, a)) continue;
      bool left = true, above = true;
      for (int b = 1; b < a && left; ++b) left = g.black(i, b);
      for (int j = 1; j < i && above; ++j) above = g.black(j, a);
      if (!left && !above) return false;
    }
  }
  return true;
}

bool is_cauchon(std::size_t m, std::size_t p, const std::vector<Cell>& black) {
  return is_cauchon(Grid(m, p, black));
}

CauchonDiagram CauchonDiagram::from_grid(Grid g) {
  if (!is_cauchon(g)) throw DomainError("grid violates the Cauchon condition:\n" + to_ascii(g));
  return CauchonDiagram(std::move(g));
}

CauchonDiagram CauchonDiagram::from_black(std::size_t m, std::size_t p, const std::vector<Cell>& black) {
  return from_grid(Grid(m, p, black));
}

CauchonDiagram CauchonDiagram::all_white(std::size_t m, std::size_t p) { return CauchonDiagram(Grid(m, p)); }

CauchonDiagram CauchonDiagram::all_black(std::size_t m, std::size_t p) {
  Grid g(m, p);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t a = 1; a <= p; ++a) g.set_black(static_cast<int>(i), static_cast<int>(a));
  return CauchonDiagram(std::move(g));
}

namespace {

struct Backtrack {
  int m, p;
  Grid grid;
  std::vector<bool> column_all_black;  // all cells placed so far in the column are black
  std::vector<CauchonDiagram>* out;

  void place(int k, bool row_all_black) {
    if (k == m * p) {
      out->push_back(CauchonDiagram::from_grid(grid));
      return;
    }
    const int i = k / p + 1, a = k % p + 1;
    if (a == 1) row_all_black = true;
    const bool col_prev = column_all_black[a - 1];

    grid.set_black(i, a, false);
    column_all_black[a - 1] = false;
    place(k + 1, false);
    column_all_black[a - 1] = col_prev;

    if (row_all_black || col_prev) {
      grid.set_black(i, a, true);
      place(k + 1, row_all_black);
      grid.set_black(i, a, false);
    }
  }
};

}  // namespace

std::vector<CauchonDiagram> enumerate_diagrams(std::size_t m, std::size_t p) {
  if (m == 0 || p == 0) throw DomainError("diagram enumeration needs m, p >= 1");
  if (m * p > 64) throw ResourceError("diagram enumeration limited to 64 cells");
  std::vector<CauchonDiagram> out;
  Backtrack bt{static_cast<int>(m), static_cast<int>(p), Grid(m, p), std::vector<bool>(p, true), &out};
  bt.place(0, true);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.mask() < y.mask(); });
  return out;
}

void for_each_diagram(std::size_t m, std::size_t p, const std::function<void(const CauchonDiagram&)>& fn) {
  for (const auto& d : enumerate_diagrams(m, p)) fn(d);
}

std::vector<Grid> non_le_fillings(std::size_t m, std::size_t p, const Guard& guard) {
  if (m * p > guard.filling_cells)
    throw ResourceError("non_le_fillings: 2^" + std::to_string(m * p) + " fillings exceed the guard");
  std::vector<Grid> out;
  const std::uint64_t total = std::uint64_t{1} << (m * p);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Grid g(m, p);
    for (std::size_t k = 0; k < m * p; ++k)
      if (mask >> k & 1) g.set_black(static_cast<int>(k / p) + 1, static_cast<int>(k % p) + 1);
    if (!is_cauchon(g)) out.push_back(std::move(g));
  }
  return out;
}

std::string to_ascii(const Grid& g) {
  std::string out;
  for (std::size_t i = 1; i <= g.rows(); ++i) {
    for (std::size_t a = 1; a <= g.cols(); ++a) out.push_back(g.black(static_cast<int>(i), static_cast<int>(a)) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

std::string to_le(const Grid& g) {
  std::string out;
  for (std::size_t i = 1; i <= g.rows(); ++i) {
    for (std::size_t a = 1; a <= g.cols(); ++a) out.push_back(g.black(static_cast<int>(i), static_cast<int>(a)) ? '0' : '1');
    out.push_back('\n');
  }
  return out;
}

Grid parse_grid_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string row;
    for (char ch : line)
      if (ch != ' ' && ch != '\t' && ch != '\r') row.push_back(ch);
    if (!row.empty()) lines.push_back(row);
  }
  if (lines.empty()) throw DomainError("empty diagram text");
  const std::size_t p = lines.front().size();
  bool le = false, cauchon_form = false;
  for (const auto& r : lines) {
    if (r.size() != p) throw DomainError("diagram rows have different lengths");
    for (char ch : r) {
      if (ch == '0' || ch == '1')
        le = true;
      else if (ch == '.' || ch == '#')
        cauchon_form = true;
      else
        throw DomainError(std::string("unexpected character '") + ch + "' in diagram text");
    }
  }
  if (le && cauchon_form) throw DomainError("diagram text mixes 0/1 and ./# notation");
  Grid g(lines.size(), p);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t a = 0; a < p; ++a)
      if (lines[i][a] == '#' || lines[i][a] == '0') g.set_black(static_cast<int>(i + 1), static_cast<int>(a + 1));
  return g;
}

}  // namespace cauchon
