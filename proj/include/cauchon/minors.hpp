#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cauchon/error.hpp"
#include "cauchon/matrix.hpp"
#include "cauchon/scalar.hpp"

namespace cauchon {

// All k-subsets of {1..n}, each ascending, in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

// Binomial coefficient as an arbitrary-precision integer.
BigInt binomial(unsigned n, unsigned k);

// A minor [I|Λ]: 1-based, strictly increasing, equal-size row and column sets.
struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;

  MinorIndex() = default;
  MinorIndex(std::vector<int> r, std::vector<int> c);

  std::size_t size() const { return rows.size(); }
  bool fits(std::size_t m, std::size_t p) const;
  MinorIndex transposed() const { return MinorIndex(cols, rows); }

  // Canonical order: size, then rows lexicographically, then columns.
  friend std::strong_ordering operator<=>(const MinorIndex& a, const MinorIndex& b);
  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

// "[1,2|2,3]"
std::string to_string(const MinorIndex& ix);
// Accepts "[1,2|2,3]" or "1,2|2,3".
MinorIndex parse_minor_index(const std::string& text);

// A set of minors of an m x p matrix.
struct MinorFamily {
  std::size_t m = 0;
  std::size_t p = 0;
  std::set<MinorIndex> members;

  MinorFamily() = default;
  MinorFamily(std::size_t m_, std::size_t p_) : m(m_), p(p_) {}

  void insert(MinorIndex ix);
  bool contains(const MinorIndex& ix) const { return members.count(ix) > 0; }
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  friend bool operator==(const MinorFamily&, const MinorFamily&) = default;
};

// Every minor index of an m x p matrix, in canonical order.
std::vector<MinorIndex> all_minor_indices(std::size_t m, std::size_t p);

// The whole family of minors of an m x p matrix.
MinorFamily full_family(std::size_t m, std::size_t p);

namespace detail {
inline std::uint32_t mask_of(const std::vector<int>& idx) {
  std::uint32_t mask = 0;
  for (int i : idx) mask |= std::uint32_t{1} << (i - 1);
  return mask;
}
}  // namespace detail

// Every minor of `a` in canonical order, computed division-free by Laplace
// expansion along the last row with memoisation over (row set, column set).
// Total work is sum_k C(m,k) C(p,k) k ring multiplications.
template <class T>
std::vector<std::pair<MinorIndex, T>> all_minors_laplace(const Matrix<T>& a) {
  const auto m = static_cast<int>(a.rows());
  const auto p = static_cast<int>(a.cols());
  if (m > 31 || p > 31) throw ResourceError("matrix too large for minor enumeration");
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  std::map<Key, T> prev;
  std::vector<std::pair<MinorIndex, T>> out;
  const int kmax = std::min(m, p);
  for (int k = 1; k <= kmax; ++k) {
    std::map<Key, T> cur;
    const auto row_sets = combinations(m, k);
    const auto col_sets = combinations(p, k);
    for (const auto& rs : row_sets) {
      const int last = rs.back() - 1;
      const std::uint32_t rmask = detail::mask_of(rs);
      const std::uint32_t rsub = rmask & ~(std::uint32_t{1} << last);
      for (const auto& cs : col_sets) {
        const std::uint32_t cmask = detail::mask_of(cs);
        T value = a(last, cs[0] - 1);
        if (k > 1) {
          // cofactor sign of (row k-1, column t) inside the k x k block is (-1)^(k-1+t)
          value = value * prev.at({rsub, cmask & ~(std::uint32_t{1} << (cs[0] - 1))});
          if ((k - 1) % 2 == 1) value = -value;
          for (int t = 1; t < k; ++t) {
            const int c = cs[t] - 1;
            T term = a(last, c) * prev.at({rsub, cmask & ~(std::uint32_t{1} << c)});
            if ((k - 1 + t) % 2 == 0)
              value = value + term;
            else
              value = value - term;
          }
        }
        cur.emplace(Key{rmask, cmask}, value);
        out.emplace_back(MinorIndex(rs, cs), value);
      }
    }
    prev = std::move(cur);
  }
  return out;
}

// Division-free determinant of a square matrix over any commutative ring.
template <class T>
T determinant_laplace(const Matrix<T>& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("determinant needs a square matrix");
  const int n = static_cast<int>(a.rows());
  // dp over column subsets: expand the first `popcount(S)` rows using columns S.
  std::map<std::uint32_t, T> prev;
  for (int c = 0; c < n; ++c) prev.emplace(std::uint32_t{1} << c, a(0, c));
  for (int r = 1; r < n; ++r) {
    std::map<std::uint32_t, T> cur;
    for (const auto& [mask, val] : prev) {
      for (int c = 0; c < n; ++c) {
        const std::uint32_t bit = std::uint32_t{1} << c;
        if (mask & bit) continue;
        // sign: number of already-used columns to the right of c
        int larger = 0;
        for (int d = c + 1; d < n; ++d)
          if (mask & (std::uint32_t{1} << d)) ++larger;
        T term = val * a(r, c);
        if (larger % 2) term = -term;
        auto it = cur.find(mask | bit);
        if (it == cur.end())
          cur.emplace(mask | bit, term);
        else
          it->second = it->second + term;
      }
    }
    prev = std::move(cur);
  }
  return prev.begin()->second;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& a, const MinorIndex& ix) {
  if (!ix.fits(a.rows(), a.cols())) throw DomainError("minor index " + to_string(ix) + " out of bounds");
  std::vector<T> out;
  out.reserve(ix.size() * ix.size());
  for (int r : ix.rows)
    for (int c : ix.cols) out.push_back(a(r - 1, c - 1));
  return Matrix<T>(ix.size(), ix.size(), std::move(out));
}

}  // namespace cauchon
