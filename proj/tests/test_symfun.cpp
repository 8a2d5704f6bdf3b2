#include <random>

#include "cauchon/restoration.hpp"
#include "cauchon/symfun.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cauchon;

namespace {
const VarsPtr T3 = matrix_vars("t", 3, 3);
const VarsPtr ABCD = matrix_vars("Y", 2, 2, true);

MPoly P(const char* s, const VarsPtr& v = T3) { return parse_mpoly(s, v); }

MPoly random_poly(std::mt19937_64& rng, const VarsPtr& vars, int terms, int degree) {
  MPoly f(vars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars->size(), 0);
    for (int d = 0; d < degree; ++d)
      if (rng() % 2) ++e[rng() % vars->size()];
    f += MPoly::monomial(vars, e, static_cast<long>(rng() % 11) - 5);
  }
  return f;
}
}  // namespace

TEST_CASE("polynomial parsing and printing") {
  CHECK(P("t[1,1]+t[1,2]").to_string() == "t[1,1] + t[1,2]");
  CHECK(P("(t[1,1] - t[2,2])^2").to_string() == "t[1,1]^2 - 2*t[1,1]*t[2,2] + t[2,2]^2");
  CHECK(P("2 t[1,1] t[3,3]") == P("2*t[1,1]*t[3,3]"));
  CHECK(parse_mpoly("a*d - b*c", ABCD).to_string() == "a*d - b*c");
  CHECK_THROWS_AS(P("t[4,1]"), DomainError);
  CHECK_THROWS_AS(P("t[1,1]^-1"), DomainError);
  CHECK_THROWS_AS(P("t[1,1] +"), DomainError);
  CHECK_THROWS_AS(P("t[1,1]/t[2,2]"), DomainError);
}

TEST_CASE("ratfunc_is_zero examples") {
  const MPoly t11 = P("t[1,1]"), t33 = P("t[3,3]");
  CHECK(ratfunc_is_zero(RatFunc(t11 * t33 - t33 * t11, t33)));
  CHECK_FALSE(ratfunc_is_zero(RatFunc(t11, t33)));
  // the [1,2|2,3] minor of the symbolic T_C for the 3x3 example diagram
  const auto tc = symbolic_TC(crossed_diagram());
  const RatFunc mnr = tc(0, 1) * tc(1, 2) - tc(0, 2) * tc(1, 1);
  CHECK(ratfunc_is_zero(mnr));
  CHECK_THROWS_AS(RatFunc(t11, MPoly(T3)), DomainError);
}

TEST_CASE("eval_mod_p examples") {
  const VarsPtr v = make_vars({"t11", "t12", "t21", "t22"});
  const MPoly sum = MPoly::variable(v, "t11") + MPoly::variable(v, "t12");
  CHECK(eval_mod_p(sum, {1, 2, 0, 0}, 101) == 3);
  CHECK(eval_mod_p(MPoly(v), {5, 6, 7, 8}, 2147483647ULL) == 0);
  const MPoly det = MPoly::variable(v, "t11") * MPoly::variable(v, "t22") -
                    MPoly::variable(v, "t12") * MPoly::variable(v, "t21");
  CHECK(eval_mod_p(det, {1, 1, 1, 1}, 7) == 0);
  CHECK(eval_mod_p(det, {3, 1, 1, 1}, 7) == 2);
  // negative coefficients land in [0, p)
  CHECK(eval_mod_p(-sum, {1, 2, 0, 0}, 101) == 98);
}

TEST_CASE("partial derivatives") {
  const auto f = [](const char* s) { return parse_mpoly(s, ABCD); };
  CHECK(f("a*d").partial_derivative("a") == f("d"));
  CHECK(f("b*c").partial_derivative("a").is_zero());
  CHECK(f("a^2*d + b*c").partial_derivative("a") == f("2*a*d"));
  CHECK_THROWS_AS(f("a").partial_derivative("z"), DomainError);
}

TEST_CASE("property: ring axioms") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const MPoly a = random_poly(rng, T3, 4, 3), b = random_poly(rng, T3, 4, 3), c = random_poly(rng, T3, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    CHECK(a - b == -(b - a));
    // evaluation is a homomorphism
    std::vector<std::uint64_t> pt;
    for (int k = 0; k < 9; ++k) pt.push_back(rng() % 1000);
    const std::uint64_t P = 2147483647ULL;
    CHECK(eval_mod_p(a * b + c, pt, P) == (mulmod(eval_mod_p(a, pt, P), eval_mod_p(b, pt, P), P) + eval_mod_p(c, pt, P)) % P);
    // Leibniz rule for the derivative
    CHECK((a * b).partial_derivative(0) == a.partial_derivative(0) * b + a * b.partial_derivative(0));
  }
}

TEST_CASE("rational functions") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const MPoly n1 = random_poly(rng, T3, 3, 2), n2 = random_poly(rng, T3, 3, 2);
    MPoly d1 = random_poly(rng, T3, 2, 2), d2 = random_poly(rng, T3, 2, 2);
    if (d1.is_zero()) d1 = MPoly::constant(T3, 3);
    if (d2.is_zero()) d2 = MPoly::constant(T3, -2);
    const RatFunc f(n1, d1), g(n2, d2);
    CHECK(ratfunc_is_zero(f - f));
    CHECK((f + g) - g == f);
    CHECK(f * g == g * f);
    if (!n2.is_zero()) CHECK((f / g) * g == f);
    // zero test agrees with random evaluation (Schwartz-Zippel cross-check)
    const RatFunc h = f * g - g * f;
    std::vector<std::uint64_t> pt;
    for (int k = 0; k < 9; ++k) pt.push_back(1 + rng() % 100000);
    const auto v = h.eval_mod(pt, 2147483647ULL);
    if (v) CHECK(*v == 0);
  }
  // monomial content is cancelled
  const RatFunc r(P("t[1,1]^2*t[2,2]"), P("t[1,1]*t[3,3]"));
  CHECK(r.num() == P("t[1,1]*t[2,2]"));
  CHECK(r.den() == P("t[3,3]"));
  CHECK(r.to_string() == "t[1,1]*t[2,2]/t[3,3]");
  const RatFunc s(P("2*t[1,1]"), P("-4*t[2,2]"));
  CHECK(s.num() == P("-t[1,1]"));
  CHECK(s.den() == P("2*t[2,2]"));
  // denominator vanishing at the point means "retry elsewhere"
  std::vector<std::uint64_t> pole(9, 1);
  pole[0] = 2147483646ULL;
  CHECK_FALSE(RatFunc(P("t[1,1]"), P("t[1,1] + 1")).eval_mod(pole, 2147483647ULL).has_value());
}

TEST_CASE("Laurent polynomials") {
  const LaurentQ q = LaurentQ::q(), qi = LaurentQ::monomial(-1);
  CHECK((q - qi).to_string() == "q - q^(-1)");
  CHECK(q * qi == LaurentQ(1));
  CHECK(q.pow(-2) == LaurentQ::monomial(-2));
  CHECK((q - qi).divide_by_q_minus_one() == LaurentQ(1) + qi);
  CHECK(((q - LaurentQ(1)) * (q + qi)).divide_by_q_minus_one() == q + qi);
  CHECK_THROWS_AS(q.divide_by_q_minus_one(), InvariantError);
  CHECK_THROWS_AS((q + LaurentQ(1)).inverse_of_unit(), DomainError);
  std::mt19937_64 rng(2);
  auto rnd = [&] {
    LaurentQ f;
    for (int k = 0; k < 4; ++k) f += LaurentQ::monomial(static_cast<int>(rng() % 7) - 3, static_cast<long>(rng() % 9) - 4);
    return f;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentQ f = rnd(), g = rnd();
    CHECK((f * g).at_one() == f.at_one() * g.at_one());
    CHECK((f + g).at_one() == f.at_one() + g.at_one());
    CHECK((f - g).at_one() == f.at_one() - g.at_one());
    const LaurentQ h = f * (q - LaurentQ(1));
    CHECK(h.divide_by_q_minus_one() == f);
  }
}

TEST_CASE("prime field") {
  const Fp a(5), b(7);
  CHECK((a / b) * b == a);
  CHECK((a - b).value() == Fp::modulus - 2);
  CHECK(is_zero(a - a));
  CHECK_THROWS_AS(a / Fp(0), DomainError);
  static_assert(ScalarDomain<Fp>);
  static_assert(ScalarDomain<Rat>);
  static_assert(ScalarDomain<RatFunc>);
}
