#include "cauchon/cells.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cauchon;

namespace {
MinorFamily zeros_of(const RatMatrix& a) {
  MinorFamily f(a.rows(), a.cols());
  for (const auto& [r, c] : oracle::zero_minors(a)) f.insert(MinorIndex(r, c));
  return f;
}
}  // namespace

TEST_CASE("admissible_families examples") {
  CHECK(admissible_families(2, 2).size() == 14);
  const auto one = admissible_families(1, 1);
  REQUIRE(one.size() == 2);
  std::set<std::size_t> sizes{one[0].family.size(), one[1].family.size()};
  CHECK(sizes == std::set<std::size_t>{0, 1});
  const auto big = admissible_families(3, 3);
  CHECK(big.size() == 230);
  std::set<std::set<MinorIndex>> distinct;
  for (const auto& d : big) distinct.insert(d.family.members);
  CHECK(distinct.size() == 230);
  Guard tight;
  tight.probabilistic_cells = 4;
  CHECK_THROWS_AS(admissible_families(3, 3, tight), ResourceError);
}

TEST_CASE("is_admissible examples") {
  const auto d_only = is_admissible(family(2, 2, {"[2|2]"}));
  CHECK_FALSE(d_only.admissible);
  CHECK_FALSE(d_only.descriptor.has_value());
  CHECK_FALSE(is_admissible(load_family(fixture("d_only.json"))).admissible);

  const auto ex = is_admissible(six_minor_family());
  CHECK(ex.admissible);
  REQUIRE(ex.descriptor);
  CHECK(ex.descriptor->diagram == crossed_diagram());
  CHECK(to_cycles(ex.descriptor->permutation.w) == "(2 3 5 4)");
  CHECK(is_admissible(load_family(fixture("six_minors.json"))).admissible);
  CHECK(is_admissible(MinorFamily(3, 4)).admissible);
  // d = 0 forces b = 0 or c = 0, and then the determinant vanishes too
  CHECK(is_admissible(family(2, 2, {"[1|2]", "[2|2]", "[1,2|1,2]"})).admissible);
  CHECK(is_admissible(family(2, 2, {"[2|1]", "[2|2]", "[1,2|1,2]"})).admissible);
}

TEST_CASE("no admissible 2x2 family is {d}") {
  for (const auto& d : admissible_families(2, 2)) CHECK_FALSE(d.family == family(2, 2, {"[2|2]"}));
}

TEST_CASE("witness_matrix examples") {
  CHECK(witness_matrix(crossed_diagram()) == rows({{2, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  CHECK(witness_matrix(CauchonDiagram::all_black(3, 2)) == zero_matrix(3, 2));
  const RatMatrix w = witness_matrix(CauchonDiagram::all_white(2, 2));
  CHECK(w == rows({{2, 1}, {1, 1}}));
  CHECK(oracle::all_minors_positive(w));
}

TEST_CASE("cell_of examples") {
  const CellDescriptor c = cell_of(rows({{2, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  CHECK(c.family == six_minor_family());
  CHECK(c.diagram == crossed_diagram());
  CHECK(to_one_line(c.permutation.w) == "135246");

  CHECK(cell_of(identity_matrix(2)).family == family(2, 2, {"[1|2]", "[2|1]"}));
  CHECK(cell_of(zero_matrix(2, 3)).family == full_family(2, 3));
  CHECK(cell_of(load_matrix(fixture("a4.json"))).family == zeros_of(load_matrix(fixture("a4.json"))));
  try {
    cell_of(load_matrix(fixture("m2.csv")));
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("[1,2|2,3]") != std::string::npos);
  }
}

TEST_CASE("property: cell_of inverts witness_matrix and the extremes are right") {
  for (int m = 1; m <= 3; ++m)
    for (int p = 1; p <= 3; ++p)
      for (const auto& d : admissible_families(m, p)) {
        const RatMatrix w = witness_matrix(d.diagram);
        CHECK(oracle::all_minors_nonnegative(w));
        const CellDescriptor back = cell_of(w);
        CHECK(back.family == d.family);
        CHECK(back.diagram == d.diagram);
        CHECK(back.permutation == d.permutation);
        CHECK(zeros_of(w) == d.family);
      }
  for (int m = 1; m <= 3; ++m)
    for (int p = 1; p <= 3; ++p) {
      CHECK(is_admissible(full_family(m, p)).descriptor->diagram == CauchonDiagram::all_black(m, p));
      CHECK(is_admissible(MinorFamily(m, p)).descriptor->diagram == CauchonDiagram::all_white(m, p));
    }
}

TEST_CASE("unifying_check") {
  const UnifyingReport r22 = unifying_check(2, 2);
  CHECK(r22.ok());
  CHECK(r22.checked == 14);
  CHECK(r22.agreed == 14);
  const UnifyingReport r12 = unifying_check(1, 2);
  CHECK(r12.checked == 4);
  CHECK(r12.ok());
  const UnifyingReport r33 = unifying_check(3, 3, 2);
  CHECK(r33.checked == 230);
  CHECK(r33.agreed == 230);
  CHECK(r33.mismatches.empty());
  const UnifyingReport some = unifying_check(3, 3, 1, {crossed_diagram()});
  CHECK(some.checked == 1);
  CHECK(some.ok());
}
