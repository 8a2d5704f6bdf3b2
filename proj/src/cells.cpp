#include "cauchon/cells.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "cauchon/error.hpp"

namespace cauchon {

std::vector<CellDescriptor> admissible_families(std::size_t m, std::size_t p, const Guard& guard) {
  guard.require_probabilistic(m, p, "admissible family table");
  std::vector<CellDescriptor> out;
  for (const auto& d : enumerate_diagrams(m, p)) {
    RestrictedPermutation w = pipe_dream(d);
    MinorFamily fam = M_of_w(w);
    out.push_back({std::move(fam), d, std::move(w)});
  }
  return out;
}

AdmissibleVerdict is_admissible(const MinorFamily& z, const Guard& guard) {
  if (z.m == 0 || z.p == 0) throw DomainError("family has no ambient shape");
  for (auto& desc : admissible_families(z.m, z.p, guard))
    if (desc.family == z) return {true, std::move(desc)};
  return {};
}

RatMatrix witness_matrix(const CauchonDiagram& c) { return rational_TC(c, Rat(1)); }

CellDescriptor cell_of(const RatMatrix& a) {
  const TnnVerdict v = is_tnn_bruteforce(a);
  if (!v.is_tnn)
    throw DomainError("matrix is not totally nonnegative: minor " + to_string(*v.witness) + " = " +
                      to_string(*v.witness_value));
  MinorFamily fam = vanishing_minors(a);
  const TnnTestResult t = tnn_test(a);
  if (!t.is_tnn) throw InvariantError("deleting derivations rejects a TNN matrix: " + t.reason);
  RestrictedPermutation w = pipe_dream(*t.diagram);
  if (M_of_w(w) != fam)
    throw InvariantError("vanishing minors disagree with M(w) for w = " + to_one_line(w.w));
  return {std::move(fam), *t.diagram, std::move(w)};
}

namespace {
std::string family_text(const MinorFamily& f) {
  std::string s = "{";
  for (const auto& ix : f.members) s += (s.size() > 1 ? "," : "") + to_string(ix);
  return s + "}";
}

std::string compare_routes(const CauchonDiagram& d, const VanishingOptions& opt) {
  const MinorFamily sym = vanishing_family(d, opt);
  const RestrictedPermutation w = pipe_dream(d);
  const MinorFamily mw = M_of_w(w);
  const MinorFamily wit = vanishing_minors(witness_matrix(d));
  std::string out;
  if (sym != mw) out += "T_C " + family_text(sym) + " vs M(" + to_one_line(w.w) + ") " + family_text(mw) + "; ";
  if (sym != wit) out += "T_C " + family_text(sym) + " vs witness " + family_text(wit) + "; ";
  return out;
}
}  // namespace

UnifyingReport unifying_check(std::size_t m, std::size_t p, unsigned jobs, const std::vector<CauchonDiagram>& diagrams,
                              const VanishingOptions& opt) {
  std::vector<CauchonDiagram> work = diagrams.empty() ? enumerate_diagrams(m, p) : diagrams;
  for (const auto& d : work)
    if (d.rows() != m || d.cols() != p) throw DomainError("diagram shape does not match the requested size");
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) { return a.mask() < b.mask(); });
  // fail early on the guard rather than inside a worker
  if (opt.backend == ZeroTest::Exact)
    opt.guard.require_exact(m, p, "unifying check");
  else
    opt.guard.require_probabilistic(m, p, "unifying check");

  std::vector<std::string> detail(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (std::size_t k; (k = next++) < work.size();) detail[k] = compare_routes(work[k], opt);
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = work.size();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  UnifyingReport rep;
  rep.m = m;
  rep.p = p;
  rep.checked = work.size();
  for (std::size_t k = 0; k < work.size(); ++k) {
    if (detail[k].empty())
      ++rep.agreed;
    else
      rep.mismatches.push_back({work[k], detail[k]});
  }
  return rep;
}

}  // namespace cauchon
