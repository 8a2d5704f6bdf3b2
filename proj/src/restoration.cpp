#include "cauchon/restoration.hpp"

#include <random>

#include "cauchon/zp.hpp"

namespace cauchon {

std::optional<StepIndex> successor(StepIndex s, std::size_t m, std::size_t p) {
  if (static_cast<std::size_t>(s.beta) < p) return StepIndex{s.j, s.beta + 1};
  if (static_cast<std::size_t>(s.j) < m) return StepIndex{s.j + 1, 1};
  return std::nullopt;
}

std::optional<StepIndex> predecessor(StepIndex s, std::size_t, std::size_t p) {
  if (s.beta > 1) return StepIndex{s.j, s.beta - 1};
  if (s.j > 1) return StepIndex{s.j - 1, static_cast<int>(p)};
  return std::nullopt;
}

TnnTestResult tnn_test(const RatMatrix& a) {
  TnnTestResult out;
  out.final = deleting_derivations(a);
  Grid zeros(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const int s = sgn(out.final(r, c));
      if (s < 0 && out.reason.empty())
        out.reason = "negative entry at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (s == 0) zeros.set_black(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
    }
  if (!out.reason.empty()) return out;
  if (!is_cauchon(zeros)) {
    out.reason = "zero pattern is not a Cauchon diagram";
    return out;
  }
  out.is_tnn = true;
  out.diagram = CauchonDiagram::from_grid(zeros);
  return out;
}

RatMatrix rational_TC(const CauchonDiagram& c, const Rat& value) {
  return build_TC(c, RatMatrix(c.rows(), c.cols(), value), Rat(0));
}

Matrix<RatFunc> symbolic_TC(const CauchonDiagram& c) {
  const VarsPtr vars = matrix_vars("t", c.rows(), c.cols());
  const RatFunc zero{MPoly(vars)};
  std::vector<RatFunc> seeds;
  for (std::size_t k = 0; k < c.rows() * c.cols(); ++k) seeds.emplace_back(MPoly::variable(vars, k));
  return build_TC(c, Matrix<RatFunc>(c.rows(), c.cols(), std::move(seeds)), zero);
}

namespace {

// Scale each row of T_C by the lcm of its (monomial) denominators. Row scaling
// by nonzero factors preserves which minors vanish.
Matrix<MPoly> clear_row_denominators(const Matrix<RatFunc>& t) {
  std::vector<MPoly> out;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const std::size_t n = t(r, 0).num().nvars();
    Exponent lcm(n, 0);
    BigInt coef = 1;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const MPoly& d = t(r, c).den();
      if (d.term_count() != 1) throw InvariantError("T_C denominator is not a monomial: " + d.to_string());
      const auto& [e, k] = *d.terms().begin();
      for (std::size_t v = 0; v < n; ++v) lcm[v] = std::max(lcm[v], e[v]);
      mpz_lcm(coef.get_mpz_t(), coef.get_mpz_t(), k.get_mpz_t());
    }
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const auto& [e, k] = *t(r, c).den().terms().begin();
      Exponent shift(n);
      for (std::size_t v = 0; v < n; ++v) shift[v] = lcm[v] - e[v];
      const BigInt factor = coef / k;
      out.push_back(t(r, c).num() * MPoly::monomial(t(r, c).vars(), shift, factor));
    }
  }
  return Matrix<MPoly>(t.rows(), t.cols(), std::move(out));
}

// Minors that vanish at every one of `points` random T_C evaluations in Z/p.
std::vector<MinorIndex> modp_candidates(const CauchonDiagram& c, int points, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  const std::size_t m = c.rows(), p = c.cols();
  std::vector<MinorIndex> idx = all_minor_indices(m, p);
  std::vector<char> alive(idx.size(), 1);
  for (int round = 0; round < points; ++round) {
    std::vector<Fp> seeds;
    for (std::size_t k = 0; k < m * p; ++k) seeds.push_back(Fp::random_nonzero(rng));
    const auto t = build_TC(c, Matrix<Fp>(m, p, std::move(seeds)), Fp(0));
    const auto minors = all_minors_laplace(t);
    for (std::size_t k = 0; k < minors.size(); ++k)
      if (!is_zero(minors[k].second)) alive[k] = 0;
  }
  std::vector<MinorIndex> out;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (alive[k]) out.push_back(idx[k]);
  return out;
}

}  // namespace

MinorFamily vanishing_family(const CauchonDiagram& c, const VanishingOptions& opt) {
  MinorFamily fam(c.rows(), c.cols());
  if (opt.backend == ZeroTest::Probabilistic) {
    opt.guard.require_probabilistic(c.rows(), c.cols(), "probabilistic vanishing family");
    for (auto& ix : modp_candidates(c, opt.points, opt.seed)) fam.insert(std::move(ix));
    return fam;
  }
  opt.guard.require_exact(c.rows(), c.cols(), "exact vanishing family");
  const Matrix<MPoly> t = clear_row_denominators(symbolic_TC(c));
  if (opt.prefilter) {
    for (auto& ix : modp_candidates(c, opt.points, opt.seed))
      if (determinant_laplace(submatrix(t, ix)).is_zero()) fam.insert(std::move(ix));
    return fam;
  }
  for (auto& [ix, v] : all_minors_laplace(t))
    if (v.is_zero()) fam.insert(ix);
  return fam;
}

}  // namespace cauchon
