// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>

#include "cauchon/cells.hpp"
#include "cauchon/flow.hpp"
#include "cauchon/network.hpp"
#include "cauchon/perm.hpp"
#include "cauchon/poisson.hpp"
#include "cauchon/quantum.hpp"
#include "cauchon/restoration.hpp"
#include "cauchon/symfun.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cauchon;

namespace {

int failures = 0;

// Runs one criterion; `limit` is the time budget in seconds (0 = none).
void criterion(int id, const std::string& what, double limit, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (problem.empty() && limit > 0 && secs > limit) problem = "took longer than " + std::to_string(limit) + " s";
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << "AC" << id << (problem.empty() ? " PASS " : " FAIL ") << what << " (" << timing << ")";
  if (!problem.empty()) std::cout << ": " << problem;
  std::cout << std::endl;
  failures += !problem.empty();
}

#define EXPECT(cond)                                     \
  do {                                                   \
    if (!(cond)) return std::string("failed: " #cond);   \
  } while (0)

std::size_t distinct_families(const std::vector<CellDescriptor>& ds) {
  std::set<std::set<MinorIndex>> seen;
  for (const auto& d : ds) seen.insert(d.family.members);
  return seen.size();
}

std::string counts(std::size_t m, std::size_t p, std::size_t want) {
  const std::size_t diagrams = enumerate_diagrams(m, p).size();
  const std::size_t brute = oracle::cauchon_masks(static_cast<int>(m), static_cast<int>(p)).size();
  const std::size_t perms = enumerate_S(m, p).size();
  const std::size_t filtered = oracle::restricted_perms(static_cast<int>(m), static_cast<int>(p)).size();
  const auto table = admissible_families(m, p);
  EXPECT(diagrams == want);
  EXPECT(brute == want);
  EXPECT(perms == want);
  EXPECT(filtered == want);
  EXPECT(table.size() == want);
  EXPECT(distinct_families(table) == want);
  return "";
}

RatMatrix random_rational(std::mt19937_64& rng, std::size_t m, std::size_t p, long lo, long hi) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, 4);
  RatMatrix a(m, p, Rat(0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < p; ++c) a(r, c) = frac(num(rng), den(rng));
  return a;
}

}  // namespace

int main() {
  criterion(1, "2x2 counts: diagrams = |S| = admissible families = 14", 1.0, [] { return counts(2, 2, 14); });
  criterion(1, "3x3 counts: diagrams = |S| = admissible families = 230", 10.0, [] { return counts(3, 3, 230); });

  criterion(2, "restoration of [[1,-1,1],[0,2,1],[1,1,1]] reproduces the worked run", 0, [] {
    std::vector<TraceEntry<Rat>> trace;
    const RatMatrix out = restoration(load_matrix(fixture("restore3.csv")), &trace);
    const RatMatrix first = rows({{1, 1, 1}, {0, 2, 1}, {1, 1, 1}}), second = rows({{2, 1, 1}, {2, 2, 1}, {1, 1, 1}});
    bool saw_first = false, saw_second = false;
    for (const auto& t : trace) {
      saw_first = saw_first || t.after == first;
      saw_second = saw_second || t.after == second;
    }
    EXPECT(saw_first);
    EXPECT(saw_second);
    EXPECT(out == rows({{3, 2, 1}, {3, 3, 1}, {1, 1, 1}}));
    return std::string();
  });

  criterion(3, "symbolic T_C matches the displayed matrix; whites = 1 gives [[2,1,1],[1,1,1],[1,1,1]]", 0, [] {
    const CauchonDiagram d = crossed_diagram();
    const auto tc = symbolic_TC(d);
    const VarsPtr v = tc(0, 0).vars();
    auto P = [&](const char* s) { return parse_mpoly(s, v); };
    const RatFunc want[3][3] = {
        {RatFunc(P("t[1,1]*t[3,3] + t[1,3]*t[3,1]"), P("t[3,3]")), RatFunc(P("t[1,3]*t[3,2]"), P("t[3,3]")),
         RatFunc(P("t[1,3]"), P("1"))},
        {RatFunc(P("t[2,3]*t[3,1]"), P("t[3,3]")), RatFunc(P("t[2,3]*t[3,2]"), P("t[3,3]")), RatFunc(P("t[2,3]"), P("1"))},
        {RatFunc(P("t[3,1]"), P("1")), RatFunc(P("t[3,2]"), P("1")), RatFunc(P("t[3,3]"), P("1"))}};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) EXPECT(tc(r, c) == want[r][c]);
    // every intermediate before the last step is T itself
    Matrix<RatFunc> t(3, 3, RatFunc(MPoly(v), MPoly::constant(v, 1)));
    for (int i = 1; i <= 3; ++i)
      for (int a = 1; a <= 3; ++a)
        if (d.white(i, a)) t(i - 1, a - 1) = RatFunc(MPoly::variable(v, (i - 1) * 3 + (a - 1)), MPoly::constant(v, 1));
    std::vector<TraceEntry<RatFunc>> trace;
    restoration(t, &trace);
    for (std::size_t k = 0; k + 1 < trace.size(); ++k) EXPECT(trace[k].after == t);
    EXPECT(rational_TC(d) == rows({{2, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    return std::string();
  });

  criterion(4, "vanishing family of the example diagram = the six minors = M((2 3 5 4))", 0, [] {
    const MinorFamily six = six_minor_family();
    EXPECT(vanishing_family(crossed_diagram()) == six);
    VanishingOptions full;
    full.prefilter = false;
    EXPECT(vanishing_family(crossed_diagram(), full) == six);
    EXPECT(M_of_w(RestrictedPermutation(3, 3, parse_permutation("(2 3 5 4)", 6))) == six);
    EXPECT(load_family(fixture("six_minors.json")) == six);
    return std::string();
  });

  criterion(5, "pipe dream of the example diagram is 135246; inverse round-trips for m,p <= 4", 0, [] {
    EXPECT(to_one_line(pipe_dream(load_diagram(fixture("crosses3.diag"))).w) == "135246");
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t p = 1; p <= 4; ++p) {
        for (const auto& d : enumerate_diagrams(m, p)) EXPECT(inverse_pipe_dream(pipe_dream(d)) == d);
        for (const auto& w : enumerate_S(m, p)) EXPECT(pipe_dream(inverse_pipe_dream(w)) == w);
      }
    return std::string();
  });

  criterion(6, "A is TNN over 69 minors and tnn_test agrees", 1.0, [] {
    const RatMatrix a = load_matrix(fixture("a4.json"));
    EXPECT(all_minors(a).size() == 69);
    EXPECT(is_tnn_bruteforce(a).is_tnn);
    EXPECT(tnn_test(a).is_tnn);
    EXPECT(oracle::all_minors_nonnegative(a));
    return std::string();
  });
  criterion(6, "M2 fails with witness [1,2|2,3] = -5", 1.0, [] {
    const RatMatrix m2 = load_matrix(fixture("m2.csv"));
    const TnnVerdict v = is_tnn_bruteforce(m2);
    EXPECT(!v.is_tnn);
    EXPECT(v.witness && to_string(*v.witness) == "[1,2|2,3]");
    EXPECT(v.witness_value && *v.witness_value == -5);
    EXPECT(!tnn_test(m2).is_tnn);
    return std::string();
  });
  criterion(6, "M1 brute force and deleting derivations agree with the oracle", 1.0, [] {
    const RatMatrix m1 = load_matrix(fixture("m1.csv"));
    const bool want = oracle::all_minors_nonnegative(m1);
    EXPECT(is_tnn_bruteforce(m1).is_tnn == want);
    EXPECT(tnn_test(m1).is_tnn == want);
    return std::string();
  });

  criterion(7, "is_tp agrees with all minors positive on 1200 random rational matrices", 0, [] {
    std::mt19937_64 rng(2024);
    int positives = 0, mismatches = 0;
    for (int trial = 0; trial < 1200; ++trial) {
      const std::size_t n = 2 + trial % 3;
      RatMatrix a;
      if (trial % 3 == 0) {
        // all-white restorations with positive seeds are TP; nudge some of them
        RatMatrix seeds = random_rational(rng, n, n, 1, 6);
        a = build_TC(CauchonDiagram::all_white(n, n), seeds, Rat(0));
        if (trial % 2) a(rng() % n, rng() % n) -= frac(1, 2);
      } else {
        a = random_rational(rng, n, n, trial % 3 == 1 ? 0 : -3, 6);
      }
      const bool want = oracle::all_minors_positive(a);
      positives += want;
      mismatches += is_tp(a) != want;
    }
    if (mismatches) return std::to_string(mismatches) + " mismatches";
    EXPECT(positives >= 100);
    return std::string();
  });

  criterion(8, "Lindstrom: every minor of every Postnikov path matrix (m,p <= 3) counts disjoint paths", 60.0, [] {
    std::size_t mismatches = 0, checked = 0;
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t p = 1; p <= 3; ++p)
        for (const auto& d : enumerate_diagrams(m, p)) {
          const PlanarNetwork net = postnikov_network(d);
          for (const auto& [key, value] : oracle::every_minor(path_matrix(net))) {
            ++checked;
            mismatches += nonintersecting_count(net, key.first, key.second) != value;
          }
        }
    if (mismatches) return std::to_string(mismatches) + " of " + std::to_string(checked) + " minors differ";
    return std::string();
  });

  criterion(9, "unifying theorem for every diagram with m,p <= 3", 0, [] {
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t p = 1; p <= 3; ++p) {
        const UnifyingReport r = unifying_check(m, p);
        if (!r.ok())
          return std::to_string(r.mismatches.size()) + " mismatches at " + std::to_string(m) + "x" + std::to_string(p);
        EXPECT(r.checked == enumerate_diagrams(m, p).size());
      }
    return std::string();
  });
  criterion(9, "unifying theorem on 10 random 4x4 diagrams (guard raised to 16 cells)", 0, [] {
    const auto all = enumerate_diagrams(4, 4);
    std::mt19937_64 rng(44);
    std::vector<CauchonDiagram> pick;
    for (int k = 0; k < 10; ++k) pick.push_back(all[rng() % all.size()]);
    VanishingOptions opt;
    opt.guard.exact_cells = 16;
    const UnifyingReport r = unifying_check(4, 4, 1, pick, opt);
    EXPECT(r.checked == 10);
    if (!r.ok()) return std::to_string(r.mismatches.size()) + " mismatches";
    return std::string();
  });

  criterion(10, "quantum relations reduce to 0, [a,d] = (q - q^-1)bc, D_q is central", 0, [] {
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t p = 1; p <= 3; ++p)
        for (const auto& r : QAlgebra::create(m, p)->check_relations()) EXPECT(r.residual.is_zero());
    const auto A = QAlgebra::create(2, 2);
    const LaurentQ q = LaurentQ::q(), qi = LaurentQ::monomial(-1);
    const QPoly a = A->generator(1, 1), b = A->generator(1, 2), c = A->generator(2, 1), d = A->generator(2, 2);
    EXPECT(A->commutator(a, d) == (b * c).scaled(q - qi));
    const QPoly D = A->quantum_minor({1, 2}, {1, 2});
    EXPECT(D == a * d - (b * c).scaled(q));
    for (const QPoly& g : {a, b, c, d}) EXPECT(A->commutator(D, g).is_zero());
    EXPECT(is_central_2x2_determinant());
    return std::string();
  });

  criterion(11, "semiclassical limit equals the Poisson table on every generator pair, m,p <= 3", 0, [] {
    std::size_t checked = 0;
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t p = 1; p <= 3; ++p)
        for (int u = 0; u < static_cast<int>(m * p); ++u)
          for (int v = 0; v < static_cast<int>(m * p); ++v) {
            if (u == v) continue;
            const int pi = static_cast<int>(p);
            ++checked;
            EXPECT(semiclassical_check(m, p, u / pi + 1, u % pi + 1, v / pi + 1, v % pi + 1).agrees);
          }
    EXPECT(checked > 0);
    return std::string();
  });

  criterion(12, "Jacobi identity on generator triples and 100 random cubics; both flows exact", 0, [] {
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t p = 1; p <= 3; ++p) {
        const PoissonRing R(m, p);
        const std::size_t n = m * p;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z)
              EXPECT(R.jacobi(R.coordinate(x / p + 1, x % p + 1), R.coordinate(y / p + 1, y % p + 1),
                              R.coordinate(z / p + 1, z % p + 1))
                         .is_zero());
      }
    const PoissonRing R(3, 3);
    std::mt19937_64 rng(1234);
    auto cubic = [&] {
      MPoly f(R.vars());
      for (int t = 0; t < 4; ++t) {
        Exponent e(9, 0);
        for (int k = 0; k < 3; ++k) ++e[rng() % 9];
        f += MPoly::monomial(R.vars(), e, static_cast<long>(rng() % 9) - 4);
      }
      return f;
    };
    for (int trial = 0; trial < 100; ++trial) EXPECT(R.jacobi(cubic(), cubic(), cubic()).is_zero());
    const PoissonRing R2(2, 2);
    for (const char* f : {"flow1.json", "flow2.json"}) {
      const FlowResidual r = verify_flow(flow_from_json(Json::parse(read_file(fixture(f)))), R2.parse("a"), R2);
      EXPECT(r.exact_zero);
      EXPECT(r.max_numeric < 1e-9L);
    }
    return std::string();
  });

  criterion(13, "the 2x2 family {[2|2]} is not admissible", 0, [] {
    EXPECT(!is_admissible(family(2, 2, {"[2|2]"})).admissible);
    EXPECT(!is_admissible(load_family(fixture("d_only.json"))).admissible);
    return std::string();
  });

  criterion(14, "rank profile of S(2,2) by length is [1,3,5,4,1]", 0, [] {
    std::map<int, int> profile;
    for (const auto& w : enumerate_S(2, 2)) ++profile[w.w.length()];
    std::vector<int> ranks;
    for (const auto& [len, n] : profile) ranks.push_back(n);
    EXPECT((ranks == std::vector<int>{1, 3, 5, 4, 1}));
    EXPECT(profile.begin()->first == 0);
    EXPECT(profile.rbegin()->first == 4);
    return std::string();
  });

  std::cout << (failures ? "FAILED " + std::to_string(failures) : std::string("ALL PASS")) << std::endl;
  return failures ? 1 : 0;
}
