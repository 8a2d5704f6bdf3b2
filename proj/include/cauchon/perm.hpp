#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "cauchon/diagram.hpp"
#include "cauchon/minors.hpp"

namespace cauchon {

// A permutation of {1..n} in one-line form. Composition is right to left:
// (u * v)(i) = u(v(i)).
class Permutation {
 public:
  Permutation() = default;
  // images[k] is w(k+1); must be a bijection on {1..n}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return w_.size(); }
  int operator()(int i) const;
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& u, const Permutation& v);
  // Number of inversions (Coxeter length).
  int length() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

// w_0^r(i) = r + 1 - i.
Permutation longest_element(std::size_t r);

// One-line text: concatenated digits when n <= 9 ("135246"), else comma separated.
std::string to_one_line(const Permutation& w);
// Disjoint cycles without fixed points, e.g. "(2 3 5 4)"; the identity is "(1)".
std::string to_cycles(const Permutation& w);
// Accepts "135246", "1,3,5,2,4,6", "1 3 5 2 4 6" or cycle notation. Cycle
// notation needs n (pass 0 to use the largest entry).
Permutation parse_permutation(const std::string& text, std::size_t n = 0);

// -p <= w(i) - i <= m for all i.
bool in_window(const Permutation& w, std::size_t m, std::size_t p);

// An element of the set S for shape (m, p).
struct RestrictedPermutation {
  std::size_t m = 0;
  std::size_t p = 0;
  Permutation w;

  RestrictedPermutation() = default;
  RestrictedPermutation(std::size_t m_, std::size_t p_, Permutation w_);
  friend auto operator<=>(const RestrictedPermutation&, const RestrictedPermutation&) = default;
};

// All of S in lexicographic order of the one-line form.
std::vector<RestrictedPermutation> enumerate_S(std::size_t m, std::size_t p);

// Crosses on black cells, elbows on white ones. Pipes enter on the bottom edge
// (column c carries label c) and the right edge (row i carries p + m + 1 - i)
// and travel up and left; they exit on the left edge (row i is m + 1 - i) and
// the top edge (column c is m + c). w maps entry label to exit label.
RestrictedPermutation pipe_dream(const CauchonDiagram& c);
// The unique diagram whose pipe dream is w.
CauchonDiagram inverse_pipe_dream(const RestrictedPermutation& w);

// Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// The minors [I|L] satisfying at least one of the four vanishing conditions
// attached to w. Index sets are compared componentwise after sorting.
MinorFamily M_of_w(const RestrictedPermutation& w);

}  // namespace cauchon
