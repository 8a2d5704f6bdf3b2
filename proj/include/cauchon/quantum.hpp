#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "cauchon/laurent.hpp"

namespace cauchon {

class QAlgebra;

// Element of O_q(M_{m,p}) in PBW normal form: each key lists how often every
// generator occurs, generators being read in lexicographic (i, a) order.
class QPoly {
 public:
  using Monomial = std::vector<int>;

  QPoly() = default;
  explicit QPoly(std::shared_ptr<const QAlgebra> alg) : alg_(std::move(alg)) {}

  const std::shared_ptr<const QAlgebra>& algebra() const { return alg_; }
  const std::map<Monomial, LaurentQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const LaurentQ& c);
  QPoly scaled(const LaurentQ& c) const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& f, const QPoly& g);
  friend QPoly operator-(const QPoly& f, const QPoly& g);
  friend QPoly operator*(const QPoly& f, const QPoly& g);
  friend bool operator==(const QPoly& f, const QPoly& g) { return f.terms_ == g.terms_; }

  std::string to_string() const;

 private:
  std::shared_ptr<const QAlgebra> alg_;
  std::map<Monomial, LaurentQ> terms_;
};

inline bool is_zero(const QPoly& f) { return f.is_zero(); }

enum class RewriteOrder { Leftmost, Rightmost, Random };

// Quantum m x p matrices. Out-of-order adjacent generators u > v, with
// u = X[j,b] and v = X[i,a], are rewritten by
//   same row      X[i,b] X[i,a] = q^-1 X[i,a] X[i,b]
//   same column   X[j,a] X[i,a] = q^-1 X[i,a] X[j,a]
//   b < a         X[j,b] X[i,a] = X[i,a] X[j,b]
//   b > a         X[j,b] X[i,a] = X[i,a] X[j,b] - (q - q^-1) X[i,b] X[j,a]
class QAlgebra : public std::enable_shared_from_this<QAlgebra> {
 public:
  static std::shared_ptr<const QAlgebra> create(std::size_t m, std::size_t p);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return p_; }
  std::size_t generator_count() const { return m_ * p_; }
  // 0-based generator id of X[i,a].
  int generator_id(int i, int a) const;
  // "X[i,a]", or a, b, c, d in the 2 x 2 case.
  std::string generator_name(int id) const;

  QPoly zero() const;
  QPoly scalar(const LaurentQ& c) const;
  QPoly generator(int i, int a) const;

  // Normal form of a product of generators given as a word of ids.
  QPoly reduce_word(const std::vector<int>& word, RewriteOrder order = RewriteOrder::Leftmost,
                    std::uint64_t seed = 0) const;
  QPoly multiply(const QPoly& f, const QPoly& g, RewriteOrder order = RewriteOrder::Leftmost,
                 std::uint64_t seed = 0) const;
  QPoly commutator(const QPoly& f, const QPoly& g) const;

  // sum over permutations s of (-q)^{l(s)} X[r1, c_s(1)] ... X[rk, c_s(k)];
  // the empty minor is 1.
  QPoly quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols) const;

  // Expression syntax of the polynomial parser with generators X[i,a], the
  // aliases a, b, c, d when 2 x 2, and the scalar q (q^-1 allowed).
  QPoly parse(std::string_view text) const;

  struct RelationCheck {
    int upper = 0;  // generator id of the left factor
    int lower = 0;
    QPoly residual;  // lhs - rhs in normal form
  };
  // Every defining relation, evaluated with generator products.
  std::vector<RelationCheck> check_relations() const;

 private:
  QAlgebra(std::size_t m, std::size_t p) : m_(m), p_(p) {}
  QPoly reduce(const std::vector<int>& word, RewriteOrder order, std::uint64_t& state) const;

  std::size_t m_;
  std::size_t p_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::vector<int>, std::map<QPoly::Monomial, LaurentQ>> memo_;
};

// [D_q, g] = 0 for D_q = ad - q bc and every 2 x 2 generator g.
bool is_central_2x2_determinant();

}  // namespace cauchon
