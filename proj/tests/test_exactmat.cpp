#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cauchon;

TEST_CASE("rational literals") {
  CHECK(parse_rat("-3/2") == frac(-3, 2));
  CHECK(parse_rat("6/4") == frac(3, 2));
  CHECK(parse_rat("0.25") == frac(1, 4));
  CHECK(parse_rat("+7") == 7);
  CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rat("x"), DomainError);
  CHECK(to_string(frac(-6, 4)) == "-3/2");
}

TEST_CASE("minor examples") {
  const RatMatrix pm = rows({{2, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(minor(pm, parse_minor_index("[1,2|2,3]")) == 0);
  CHECK(minor(identity_matrix(3), parse_minor_index("[1,2,3|1,2,3]")) == 1);
  const RatMatrix m2 = load_matrix(fixture("m2.csv"));
  CHECK(minor(m2, parse_minor_index("[1,2|2,3]")) == -5);
  CHECK_THROWS_AS(minor(pm, parse_minor_index("[1,4|1,2]")), DomainError);
  CHECK_THROWS_AS(MinorIndex({2, 1}, {1, 2}), DomainError);
  CHECK_THROWS_AS(MinorIndex({1}, {1, 2}), DomainError);
}

TEST_CASE("all_minors sizes and order") {
  const RatMatrix a = load_matrix(fixture("a4.json"));
  const auto all = all_minors(a);
  CHECK(all.size() == 69);
  for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1].first < all[k].first);
  const auto one = all_minors(rows({{5}}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].second == 5);
  CHECK(to_string(one[0].first) == "[1|1]");
  CHECK(all_minors(rows({{1, 2, 3}, {4, 5, 6}})).size() == 9);
}

TEST_CASE("minor_count") {
  CHECK(minor_count(4, 4) == 69);
  CHECK(minor_count(1, 1) == 1);
  CHECK(minor_count(3, 3) == 19);
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t p = 1; p <= 4; ++p)
      CHECK(minor_count(m, p) == static_cast<long>(all_minor_indices(m, p).size()));
}

TEST_CASE("initial minors") {
  const auto im = initial_minors(rows({{1, 2}, {3, 4}}));
  REQUIRE(im.size() == 4);
  CHECK(im[0].second == 1);
  CHECK(im[1].second == 2);
  CHECK(im[2].second == 3);
  CHECK(im[3].second == -2);
  CHECK(to_string(im[3].first) == "[1,2|1,2]");
  // corner (3,2) of a 3x3 uses rows 2,3 and columns 1,2
  const auto im3 = initial_minors(identity_matrix(3));
  CHECK(to_string(im3[7].first) == "[2,3|1,2]");
  for (const auto& [ix, v] : im3) {
    const bool diagonal = ix.rows == ix.cols;
    CHECK(v == (diagonal ? 1 : 0));
  }
  for (const auto& [ix, v] : initial_minors(RatMatrix(3, 3, Rat(1)))) CHECK(v == (ix.size() == 1 ? 1 : 0));
  CHECK_THROWS_AS(initial_minors(rows({{1, 2, 3}})), DomainError);
}

TEST_CASE("is_tp examples") {
  CHECK(is_tp(rows({{1, 1}, {1, 2}})));
  CHECK_FALSE(is_tp(rows({{1, 1}, {1, 1}})));
  CHECK_FALSE(is_tp(load_matrix(fixture("a4.json"))));
  CHECK_THROWS_AS(is_tp(rows({{1, 2}})), DomainError);
}

TEST_CASE("is_tnn_bruteforce examples") {
  CHECK(is_tnn_bruteforce(load_matrix(fixture("a4.json"))).is_tnn);
  const auto v = is_tnn_bruteforce(load_matrix(fixture("m2.csv")));
  CHECK_FALSE(v.is_tnn);
  REQUIRE(v.witness);
  CHECK(to_string(*v.witness) == "[1,2|2,3]");
  CHECK(*v.witness_value == -5);
  CHECK(is_tnn_bruteforce(zero_matrix(3, 4)).is_tnn);
}

TEST_CASE("property: minors agree with Leibniz expansion and transpose duality") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 4, p = 1 + rng() % 4;
    RatMatrix a = oracle::random_matrix(rng, m, p, -5, 5);
    if (trial % 3 == 0) a(0, 0) = frac(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    const auto expected = oracle::every_minor(a);
    const auto got = all_minors(a);
    REQUIRE(got.size() == expected.size());
    for (const auto& [ix, v] : got) {
      CHECK(v == expected.at({ix.rows, ix.cols}));
      CHECK(minor(a, ix) == v);
      CHECK(minor(a.transpose(), ix.transposed()) == v);
    }
  }
}

TEST_CASE("property: is_tp matches the all-minors oracle") {
  std::mt19937_64 rng(7);
  int positives = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    // bias towards TP-ish matrices so both verdicts occur
    RatMatrix a = oracle::random_matrix(rng, n, n, trial % 2 ? 1 : -5, 5);
    const bool expected = oracle::all_minors_positive(a);
    positives += expected;
    CHECK(is_tp(a) == expected);
  }
  // Vandermonde-like matrices are TP
  for (int n = 2; n <= 4; ++n) {
    RatMatrix v(n, n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat x = 1;
        for (int k = 0; k < j; ++k) x *= i + 1;
        v(i, j) = x;
      }
    CHECK(is_tp(v));
    CHECK(oracle::all_minors_positive(v));
  }
  CHECK(positives > 0);
}

TEST_CASE("property: tnn brute force and vanishing set match the oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const RatMatrix a = oracle::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, trial % 2 ? 0 : -1, 2);
    CHECK(is_tnn_bruteforce(a).is_tnn == oracle::all_minors_nonnegative(a));
    std::set<oracle::MinorKey> got;
    for (const auto& ix : vanishing_minors(a).members) got.insert({ix.rows, ix.cols});
    CHECK(got == oracle::zero_minors(a));
  }
}
