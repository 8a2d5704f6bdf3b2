#include "cauchon/poisson.hpp"

#include "cauchon/error.hpp"
#include "cauchon/expr.hpp"
#include "cauchon/quantum.hpp"

namespace cauchon {

PoissonRing::PoissonRing(std::size_t m, std::size_t p) : m_(m), p_(p), vars_(matrix_vars("Y", m, p, true)) {
  if (m == 0 || p == 0) throw DomainError("Poisson ring needs m, p >= 1");
}

MPoly PoissonRing::coordinate(int i, int a) const {
  if (i < 1 || a < 1 || static_cast<std::size_t>(i) > m_ || static_cast<std::size_t>(a) > p_)
    throw DomainError("coordinate Y[" + std::to_string(i) + "," + std::to_string(a) + "] out of range");
  return MPoly::variable(vars_, (i - 1) * p_ + (a - 1));
}

MPoly PoissonRing::parse(std::string_view text) const {
  Semantics<MPoly> sem;
  sem.integer = [&](const BigInt& v) { return MPoly::constant(vars_, v); };
  sem.symbol = [&](const Expr& e) -> MPoly {
    if (e.index) {
      if (e.name != "Y") throw DomainError("unknown variable " + e.name + "[...]");
      return coordinate(e.index->first, e.index->second);
    }
    return MPoly::variable(vars_, e.name);
  };
  sem.power = [&](const MPoly& base, long k) {
    if (k < 0) throw DomainError("negative powers are not polynomial");
    return base.pow(static_cast<unsigned>(k));
  };
  return evaluate(parse_expression(text), sem);
}

MPoly PoissonRing::generator_bracket(std::size_t u, std::size_t v) const {
  const std::size_t n = m_ * p_;
  if (u >= n || v >= n) throw DomainError("generator id out of range");
  if (u == v) return MPoly(vars_);
  if (u > v) return -generator_bracket(v, u);
  const int i = static_cast<int>(u / p_) + 1, a = static_cast<int>(u % p_) + 1;
  const int k = static_cast<int>(v / p_) + 1, c = static_cast<int>(v % p_) + 1;
  if (i == k || a == c) return coordinate(i, a) * coordinate(k, c);
  if (a > c) return MPoly(vars_);
  return (coordinate(i, c) * coordinate(k, a)).scaled(2);
}

MPoly PoissonRing::bracket(const MPoly& f, const MPoly& g) const {
  const std::size_t n = m_ * p_;
  std::vector<MPoly> df, dg;
  for (std::size_t v = 0; v < n; ++v) {
    df.push_back(f.partial_derivative(v));
    dg.push_back(g.partial_derivative(v));
  }
  MPoly out(vars_);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const MPoly cross = df[u] * dg[v] - df[v] * dg[u];
      if (cross.is_zero()) continue;
      out += generator_bracket(u, v) * cross;
    }
  return out;
}

MPoly PoissonRing::jacobi(const MPoly& f, const MPoly& g, const MPoly& h) const {
  return bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
}

SemiclassicalResult semiclassical_check(std::size_t m, std::size_t p, int i, int a, int k, int c) {
  if (i == k && a == c) throw DomainError("semiclassical check needs two distinct generators");
  const auto alg = QAlgebra::create(m, p);
  const PoissonRing ring(m, p);
  const QPoly comm = alg->commutator(alg->generator(i, a), alg->generator(k, c));
  SemiclassicalResult out;
  out.from_quantum = MPoly(ring.vars());
  for (const auto& [mono, coef] : comm.terms())
    out.from_quantum += MPoly::monomial(ring.vars(), mono, coef.divide_by_q_minus_one().at_one());
  out.from_table = ring.bracket(ring.coordinate(i, a), ring.coordinate(k, c));
  out.agrees = out.from_quantum == out.from_table;
  return out;
}

}  // namespace cauchon
