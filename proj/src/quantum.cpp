#include "cauchon/quantum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cauchon/error.hpp"
#include "cauchon/expr.hpp"

namespace cauchon {

void QPoly::add_term(const Monomial& mono, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly QPoly::scaled(const LaurentQ& c) const {
  QPoly out(alg_);
  for (const auto& [mono, k] : terms_) out.add_term(mono, k * c);
  return out;
}

QPoly QPoly::operator-() const { return scaled(LaurentQ(-1)); }

namespace {
const std::shared_ptr<const QAlgebra>& common_algebra(const QPoly& f, const QPoly& g) {
  if (f.algebra() && g.algebra() && f.algebra() != g.algebra()) {
    if (f.algebra()->rows() != g.algebra()->rows() || f.algebra()->cols() != g.algebra()->cols())
      throw DomainError("quantum polynomials from different algebras");
  }
  return f.algebra() ? f.algebra() : g.algebra();
}
}  // namespace

QPoly operator+(const QPoly& f, const QPoly& g) {
  QPoly out(common_algebra(f, g));
  for (const auto& [mono, c] : f.terms_) out.add_term(mono, c);
  for (const auto& [mono, c] : g.terms_) out.add_term(mono, c);
  return out;
}

QPoly operator-(const QPoly& f, const QPoly& g) { return f + (-g); }

QPoly operator*(const QPoly& f, const QPoly& g) {
  const auto& alg = common_algebra(f, g);
  if (!alg) throw DomainError("quantum polynomial without an algebra");
  return alg->multiply(f, g);
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending exponent order puts a*d ahead of b*c
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    std::string word;
    for (std::size_t g = 0; g < mono.size(); ++g) {
      if (mono[g] == 0) continue;
      if (!word.empty()) word += '*';
      word += alg_->generator_name(static_cast<int>(g));
      if (mono[g] > 1) word += '^' + std::to_string(mono[g]);
    }
    std::string coef = c.to_string();
    bool negative = false;
    if (c.coefficients().size() == 1 && c.coefficients().begin()->second < 0) {
      negative = true;
      coef = (-c).to_string();
    }
    if (c.coefficients().size() > 1) coef = "(" + coef + ")";
    std::string body;
    if (word.empty())
      body = coef;
    else if (coef == "1")
      body = word;
    else
      body = coef + "*" + word;
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

std::shared_ptr<const QAlgebra> QAlgebra::create(std::size_t m, std::size_t p) {
  if (m == 0 || p == 0) throw DomainError("quantum matrices need m, p >= 1");
  return std::shared_ptr<const QAlgebra>(new QAlgebra(m, p));
}

int QAlgebra::generator_id(int i, int a) const {
  if (i < 1 || a < 1 || static_cast<std::size_t>(i) > m_ || static_cast<std::size_t>(a) > p_)
    throw DomainError("generator X[" + std::to_string(i) + "," + std::to_string(a) + "] outside " +
                      std::to_string(m_) + "x" + std::to_string(p_));
  return (i - 1) * static_cast<int>(p_) + (a - 1);
}

std::string QAlgebra::generator_name(int id) const {
  if (m_ == 2 && p_ == 2) return std::string(1, static_cast<char>('a' + id));
  const int p = static_cast<int>(p_);
  return "X[" + std::to_string(id / p + 1) + "," + std::to_string(id % p + 1) + "]";
}

QPoly QAlgebra::zero() const { return QPoly(shared_from_this()); }

QPoly QAlgebra::scalar(const LaurentQ& c) const {
  QPoly out(shared_from_this());
  out.add_term(QPoly::Monomial(generator_count(), 0), c);
  return out;
}

QPoly QAlgebra::generator(int i, int a) const { return reduce_word({generator_id(i, a)}); }

QPoly QAlgebra::reduce_word(const std::vector<int>& word, RewriteOrder order, std::uint64_t seed) const {
  for (int g : word)
    if (g < 0 || static_cast<std::size_t>(g) >= generator_count()) throw DomainError("generator id out of range");
  std::uint64_t state = seed;
  return reduce(word, order, state);
}

QPoly QAlgebra::reduce(const std::vector<int>& word, RewriteOrder order, std::uint64_t& state) const {
  std::vector<std::size_t> descents;
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (word[k] > word[k + 1]) descents.push_back(k);

  QPoly out(shared_from_this());
  if (descents.empty()) {
    QPoly::Monomial mono(generator_count(), 0);
    for (int g : word) ++mono[g];
    out.add_term(mono, LaurentQ(1));
    return out;
  }
  if (order == RewriteOrder::Leftmost) {
    std::lock_guard lock(memo_mu_);
    if (auto it = memo_.find(word); it != memo_.end()) {
      for (const auto& [mono, c] : it->second) out.add_term(mono, c);
      return out;
    }
  }

  std::size_t k = descents.front();
  if (order == RewriteOrder::Rightmost) k = descents.back();
  if (order == RewriteOrder::Random) {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    k = descents[(z ^ (z >> 31)) % descents.size()];
  }

  const int p = static_cast<int>(p_);
  const int u = word[k], v = word[k + 1];
  const int j = u / p, b = u % p, i = v / p, a = v % p;  // 0-based
  auto with = [&](std::vector<int> mid) {
    std::vector<int> w(word.begin(), word.begin() + static_cast<long>(k));
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), word.begin() + static_cast<long>(k) + 2, word.end());
    return w;
  };
  const LaurentQ qinv = LaurentQ::monomial(-1);
  if (i == j || a == b) {
    out = reduce(with({v, u}), order, state).scaled(qinv);
  } else if (b < a) {
    out = reduce(with({v, u}), order, state);
  } else {
    const LaurentQ q_minus = LaurentQ::q() - qinv;
    out = reduce(with({v, u}), order, state) -
          reduce(with({i * p + b, j * p + a}), order, state).scaled(q_minus);
  }
  if (order == RewriteOrder::Leftmost) {
    std::lock_guard lock(memo_mu_);
    memo_.emplace(word, out.terms());
  }
  return out;
}

QPoly QAlgebra::multiply(const QPoly& f, const QPoly& g, RewriteOrder order, std::uint64_t seed) const {
  auto word_of = [](const QPoly::Monomial& mono) {
    std::vector<int> w;
    for (std::size_t gen = 0; gen < mono.size(); ++gen) w.insert(w.end(), mono[gen], static_cast<int>(gen));
    return w;
  };
  QPoly out(shared_from_this());
  std::uint64_t state = seed;
  for (const auto& [mf, cf] : f.terms()) {
    const std::vector<int> wf = word_of(mf);
    for (const auto& [mg, cg] : g.terms()) {
      std::vector<int> w = wf;
      const std::vector<int> wg = word_of(mg);
      w.insert(w.end(), wg.begin(), wg.end());
      const LaurentQ c = cf * cg;
      const QPoly r = reduce(w, order, state);
      for (const auto& [mono, k] : r.terms()) out.add_term(mono, k * c);
    }
  }
  return out;
}

QPoly QAlgebra::commutator(const QPoly& f, const QPoly& g) const { return multiply(f, g) - multiply(g, f); }

QPoly QAlgebra::quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw DomainError("quantum minor needs equally many rows and columns");
  for (std::size_t k = 1; k < rows.size(); ++k)
    if (rows[k - 1] >= rows[k] || cols[k - 1] >= cols[k]) throw DomainError("minor indices must increase");
  QPoly out(shared_from_this());
  if (rows.empty()) return scalar(LaurentQ(1));
  std::vector<int> sigma(rows.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t x = 0; x < sigma.size(); ++x)
      for (std::size_t y = x + 1; y < sigma.size(); ++y) inversions += sigma[x] > sigma[y];
    std::vector<int> word;
    for (std::size_t k = 0; k < rows.size(); ++k) word.push_back(generator_id(rows[k], cols[sigma[k]]));
    const LaurentQ c = LaurentQ::monomial(inversions, inversions % 2 ? -1 : 1);
    const QPoly r = reduce_word(word);
    for (const auto& [mono, k] : r.terms()) out.add_term(mono, k * c);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

QPoly QAlgebra::parse(std::string_view text) const {
  Semantics<QPoly> sem;
  sem.integer = [&](const BigInt& v) { return scalar(LaurentQ(v)); };
  sem.symbol = [&](const Expr& e) -> QPoly {
    if (e.index) {
      if (e.name != "X") throw DomainError("unknown generator " + e.name + "[...]");
      return generator(e.index->first, e.index->second);
    }
    if (e.name == "q") return scalar(LaurentQ::q());
    if (m_ == 2 && p_ == 2 && e.name.size() == 1 && e.name[0] >= 'a' && e.name[0] <= 'd') {
      const int id = e.name[0] - 'a';
      return generator(id / 2 + 1, id % 2 + 1);
    }
    throw DomainError("unknown symbol '" + e.name + "'");
  };
  sem.power = [&](const QPoly& base, long k) -> QPoly {
    if (k >= 0) {
      QPoly out = scalar(LaurentQ(1));
      for (long r = 0; r < k; ++r) out = multiply(out, base);
      return out;
    }
    // only scalar units such as q may be inverted
    if (base.terms().size() != 1 || std::any_of(base.terms().begin()->first.begin(),
                                                base.terms().begin()->first.end(), [](int e) { return e != 0; }))
      throw DomainError("negative powers are only allowed for q");
    return scalar(base.terms().begin()->second.pow(static_cast<int>(k)));
  };
  return evaluate(parse_expression(text), sem);
}

std::vector<QAlgebra::RelationCheck> QAlgebra::check_relations() const {
  std::vector<RelationCheck> out;
  const int p = static_cast<int>(p_);
  const LaurentQ qinv = LaurentQ::monomial(-1);
  for (int u = 0; u < static_cast<int>(generator_count()); ++u)
    for (int v = 0; v < u; ++v) {
      const int j = u / p + 1, b = u % p + 1, i = v / p + 1, a = v % p + 1;
      const QPoly xu = generator(j, b), xv = generator(i, a);
      const QPoly lhs = multiply(xu, xv);
      QPoly rhs = multiply(xv, xu);
      if (i == j || a == b)
        rhs = rhs.scaled(qinv);
      else if (b > a)
        rhs = rhs - multiply(generator(i, b), generator(j, a)).scaled(LaurentQ::q() - qinv);
      out.push_back({u, v, lhs - rhs});
    }
  return out;
}

bool is_central_2x2_determinant() {
  const auto alg = QAlgebra::create(2, 2);
  const QPoly d = alg->quantum_minor({1, 2}, {1, 2});
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a)
      if (!alg->commutator(d, alg->generator(i, a)).is_zero()) return false;
  return alg->commutator(d, alg->scalar(LaurentQ(1))).is_zero();
}

}  // namespace cauchon
