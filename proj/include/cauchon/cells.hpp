#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cauchon/diagram.hpp"
#include "cauchon/exactmat.hpp"
#include "cauchon/guard.hpp"
#include "cauchon/minors.hpp"
#include "cauchon/perm.hpp"
#include "cauchon/restoration.hpp"

namespace cauchon {

struct CellDescriptor {
  MinorFamily family;
  CauchonDiagram diagram;
  RestrictedPermutation permutation;
};

// One descriptor per Cauchon diagram, in diagram order. The family is read off
// M(w) for w = pipe_dream(C), which needs no symbolic algebra.
std::vector<CellDescriptor> admissible_families(std::size_t m, std::size_t p, const Guard& guard = Guard::from_env());

struct AdmissibleVerdict {
  bool admissible = false;
  std::optional<CellDescriptor> descriptor;
};

AdmissibleVerdict is_admissible(const MinorFamily& z, const Guard& guard = Guard::from_env());

// All ones on the white cells, pushed through restoration.
RatMatrix witness_matrix(const CauchonDiagram& c);

// Vanishing family, deleting-derivations diagram and pipe dream of a TNN
// matrix. Throws DomainError (naming the negative witness) when `a` is not
// TNN, and InvariantError if the three routes disagree.
CellDescriptor cell_of(const RatMatrix& a);

struct UnifyingMismatch {
  CauchonDiagram diagram;
  std::string detail;
};

struct UnifyingReport {
  std::size_t m = 0;
  std::size_t p = 0;
  std::size_t checked = 0;
  std::size_t agreed = 0;
  std::vector<UnifyingMismatch> mismatches;  // ordered by diagram mask
  bool ok() const { return mismatches.empty() && checked == agreed; }
};

// For each diagram C compares vanishing_family(C), M(pipe_dream(C)) and the
// vanishing minors of witness_matrix(C). `diagrams` restricts the run to the
// given ones (all diagrams when empty). Work is spread over `jobs` threads.
UnifyingReport unifying_check(std::size_t m, std::size_t p, unsigned jobs = 1,
                              const std::vector<CauchonDiagram>& diagrams = {},
                              const VanishingOptions& opt = {});

}  // namespace cauchon
