#include <random>

#include "cauchon/flow.hpp"
#include "cauchon/io.hpp"
#include "cauchon/poisson.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cauchon;

namespace {

MPoly random_cubic(const PoissonRing& R, std::mt19937_64& rng) {
  MPoly f(R.vars());
  const std::size_t n = R.vars()->size();
  for (int t = 0; t < 4; ++t) {
    Exponent e(n, 0);
    const int deg = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < deg; ++k) ++e[rng() % n];
    f += MPoly::monomial(R.vars(), e, static_cast<long>(rng() % 9) - 4);
  }
  return f;
}

// The explicit 2x2 formula, term by term.
MPoly bracket_2x2(const PoissonRing& R, const MPoly& f, const MPoly& g) {
  auto Y = [&](const char* s) { return R.parse(s); };
  auto D = [](const MPoly& h, const char* v) { return h.partial_derivative(v); };
  auto pair = [&](const char* u, const char* v) { return D(f, u) * D(g, v) - D(f, v) * D(g, u); };
  return Y("a*b") * pair("a", "b") + Y("a*c") * pair("a", "c") + Y("b*d") * pair("b", "d") +
         Y("c*d") * pair("c", "d") + Y("2*b*c") * pair("a", "d");
}

}  // namespace

TEST_CASE("generator brackets at 2x2") {
  const PoissonRing R(2, 2);
  auto Y = [&](const char* s) { return R.parse(s); };
  CHECK(R.bracket(Y("a"), Y("d")) == Y("2*b*c"));
  CHECK(R.bracket(Y("b"), Y("c")).is_zero());
  CHECK(R.bracket(Y("a"), Y("b")) == Y("a*b"));
  CHECK(R.bracket(Y("a"), Y("c")) == Y("a*c"));
  CHECK(R.bracket(Y("b"), Y("d")) == Y("b*d"));
  CHECK(R.bracket(Y("c"), Y("d")) == Y("c*d"));
  CHECK(R.bracket(Y("d"), Y("a")) == Y("-2*b*c"));
  CHECK(R.parse("Y[2,1]") == Y("c"));
  const MPoly f = Y("a*d - b*c");
  CHECK(R.bracket(f, f).is_zero());
  // the determinant is a Casimir
  for (const char* g : {"a", "b", "c", "d"}) CHECK(R.bracket(f, Y(g)).is_zero());
}

TEST_CASE("generator table at 3x3") {
  const PoissonRing R(3, 3);
  auto Y = [&](const char* s) { return R.parse(s); };
  CHECK(R.bracket(Y("Y[1,1]"), Y("Y[1,3]")) == Y("Y[1,1]*Y[1,3]"));
  CHECK(R.bracket(Y("Y[1,2]"), Y("Y[3,2]")) == Y("Y[1,2]*Y[3,2]"));
  CHECK(R.bracket(Y("Y[1,3]"), Y("Y[2,1]")).is_zero());
  CHECK(R.bracket(Y("Y[1,1]"), Y("Y[3,2]")) == Y("2*Y[1,2]*Y[3,1]"));
  CHECK(R.generator_bracket(0, 8) == Y("2*Y[1,3]*Y[3,1]"));
  CHECK(R.generator_bracket(8, 0) == Y("-2*Y[1,3]*Y[3,1]"));
}

TEST_CASE("property: general bracket matches the explicit 2x2 formula") {
  const PoissonRing R(2, 2);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const MPoly f = random_cubic(R, rng), g = random_cubic(R, rng);
    CHECK(R.bracket(f, g) == bracket_2x2(R, f, g));
  }
}

TEST_CASE("property: antisymmetry and Leibniz rule") {
  std::mt19937_64 rng(10);
  for (auto [m, p] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const PoissonRing R(m, p);
    for (int trial = 0; trial < 30; ++trial) {
      const MPoly f = random_cubic(R, rng), g = random_cubic(R, rng), h = random_cubic(R, rng);
      CHECK(R.bracket(f, g) == -R.bracket(g, f));
      CHECK(R.bracket(f, g * h) == R.bracket(f, g) * h + g * R.bracket(f, h));
      CHECK(R.bracket(f, g + h) == R.bracket(f, g) + R.bracket(f, h));
    }
  }
}

TEST_CASE("jacobi examples") {
  const PoissonRing R(2, 2);
  auto Y = [&](const char* s) { return R.parse(s); };
  CHECK(R.jacobi(Y("a"), Y("b"), Y("c")).is_zero());
  CHECK(R.jacobi(Y("a*d"), Y("a*d"), Y("b")).is_zero());
}

TEST_CASE("property: Jacobi on generator triples and random cubics") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t p = 1; p <= 3; ++p) {
      const PoissonRing R(m, p);
      const int n = static_cast<int>(m * p);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          for (int w = v + 1; w < n; ++w) {
            const MPoly x = MPoly::variable(R.vars(), u), y = MPoly::variable(R.vars(), v), z = MPoly::variable(R.vars(), w);
            CHECK(R.jacobi(x, y, z).is_zero());
          }
    }
  const PoissonRing R(3, 3);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial)
    CHECK(R.jacobi(random_cubic(R, rng), random_cubic(R, rng), random_cubic(R, rng)).is_zero());
}

TEST_CASE("semiclassical examples") {
  const auto ad = semiclassical_check(2, 2, 1, 1, 2, 2);
  CHECK(ad.agrees);
  CHECK(ad.from_table == PoissonRing(2, 2).parse("2*b*c"));
  CHECK(semiclassical_check(2, 2, 1, 2, 2, 1).agrees);
  CHECK(semiclassical_check(2, 2, 1, 2, 2, 1).from_quantum.is_zero());
  const auto ab = semiclassical_check(2, 2, 1, 1, 1, 2);
  CHECK(ab.agrees);
  CHECK(ab.from_quantum == PoissonRing(2, 2).parse("a*b"));
  CHECK_THROWS_AS(semiclassical_check(2, 2, 1, 1, 1, 1), DomainError);
}

TEST_CASE("property: semiclassical limit on every generator pair") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t p = 1; p <= 3; ++p)
      for (int i = 1; i <= static_cast<int>(m); ++i)
        for (int a = 1; a <= static_cast<int>(p); ++a)
          for (int k = 1; k <= static_cast<int>(m); ++k)
            for (int c = 1; c <= static_cast<int>(p); ++c) {
              if (i == k && a == c) continue;
              CHECK(semiclassical_check(m, p, i, a, k, c).agrees);
            }
}

TEST_CASE("exponential polynomials") {
  const std::map<std::string, Rat> params{{"alpha", 2}, {"beta", frac(1, 3)}};
  const ExpPoly e = parse_exp_poly("beta*exp(alpha*t)", params);
  CHECK(e.derivative() == parse_exp_poly("2/3*exp(2*t)"));
  CHECK(parse_exp_poly("t^2").derivative() == parse_exp_poly("2*t"));
  CHECK(parse_exp_poly("exp(t)*exp(-t)") == ExpPoly(Rat(1)));
  CHECK(parse_exp_poly("(t*exp(3*t))").derivative() == parse_exp_poly("exp(3*t) + 3*t*exp(3*t)"));
  CHECK(parse_exp_poly("exp(0*t) - 1").is_zero());
  CHECK(parse_exp_poly("t + 1").eval(2.0L) == doctest::Approx(3.0));
  CHECK_THROWS_AS(parse_exp_poly("1/t"), DomainError);
  CHECK_THROWS_AS(parse_exp_poly("exp(t^2)"), DomainError);
  CHECK_THROWS_AS(parse_exp_poly("zeta"), DomainError);
}

TEST_CASE("flows of H = a") {
  const PoissonRing R(2, 2);
  const MPoly H = R.parse("a");
  const FlowResidual one = verify_flow(flow_from_json(Json::parse(read_file(fixture("flow1.json")))), H, R);
  CHECK(one.exact_zero);
  CHECK(one.max_numeric < 1e-9L);
  const FlowResidual two = verify_flow(flow_from_json(Json::parse(read_file(fixture("flow2.json")))), H, R);
  CHECK(two.exact_zero);
  CHECK(two.max_numeric < 1e-9L);

  FlowPath constant{2, 2, {}, Matrix<ExpPoly>(2, 2, ExpPoly(Rat(4)))};
  CHECK(verify_flow(constant, R.parse("7"), R).exact_zero);
  // a path that is not a flow: b constant while a = 1
  FlowPath wrong{2, 2, {}, Matrix<ExpPoly>(2, 2, ExpPoly(Rat(1)))};
  const FlowResidual bad = verify_flow(wrong, H, R);
  CHECK_FALSE(bad.exact_zero);
  CHECK(bad.max_numeric > 0.5L);
  REQUIRE(bad.residuals.size() == 4);
  CHECK(bad.residuals[0] == "0");
  CHECK(bad.residuals[1] == "-1");
}
