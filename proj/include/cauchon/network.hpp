#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cauchon/diagram.hpp"
#include "cauchon/exactmat.hpp"

namespace cauchon {

struct NetVertex {
  std::string name;
  // Grid position: x grows to the right, y grows downwards.
  int x = 0;
  int y = 0;
};

struct NetEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Rat weight = 1;
};

// A directed acyclic network with distinguished sources s_1..s_m and sinks
// t_1..t_p (stored as vertex ids).
struct PlanarNetwork {
  std::vector<NetVertex> vertices;
  std::vector<NetEdge> edges;
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;

  std::size_t add_vertex(std::string name, int x, int y);
  void add_edge(std::size_t from, std::size_t to, Rat weight = 1);
  // Throws DomainError on dangling ids or repeated terminals.
  void validate() const;
};

// Vertex ids in a topological order; DomainError when there is a cycle.
std::vector<std::size_t> topological_order(const PlanarNetwork& net);

// Entry (i, j) is the total weight of paths s_i -> t_j.
RatMatrix path_matrix(const PlanarNetwork& net);

// Total weight of the families of pairwise vertex-disjoint paths joining the
// sources `rows` to the sinks `cols` (1-based), found by listing every path.
// No pairing is imposed; in a planar network only the order-preserving one
// can occur. ResourceError once more than `path_limit` paths are listed.
Rat nonintersecting_count(const PlanarNetwork& net, const std::vector<int>& rows, const std::vector<int>& cols,
                          std::size_t path_limit = 200000);

// One vertex per white cell. Row i is a hook from s_i (right end) through the
// row's dots right to left; every dot also feeds the next dot below it, and
// the lowest dot in column a feeds t_a.
PlanarNetwork postnikov_network(const CauchonDiagram& c);

}  // namespace cauchon
