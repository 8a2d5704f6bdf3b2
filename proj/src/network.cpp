#include "cauchon/network.hpp"

#include <functional>
#include <set>

#include "cauchon/error.hpp"

namespace cauchon {

std::size_t PlanarNetwork::add_vertex(std::string name, int x, int y) {
  vertices.push_back({std::move(name), x, y});
  return vertices.size() - 1;
}

void PlanarNetwork::add_edge(std::size_t from, std::size_t to, Rat weight) {
  edges.push_back({from, to, std::move(weight)});
}

void PlanarNetwork::validate() const {
  for (const auto& e : edges)
    if (e.from >= vertices.size() || e.to >= vertices.size()) throw DomainError("edge refers to a missing vertex");
  std::set<std::size_t> terminals;
  for (auto v : sources) {
    if (v >= vertices.size()) throw DomainError("source refers to a missing vertex");
    if (!terminals.insert(v).second) throw DomainError("repeated source or sink vertex");
  }
  for (auto v : sinks) {
    if (v >= vertices.size()) throw DomainError("sink refers to a missing vertex");
    if (!terminals.insert(v).second) throw DomainError("repeated source or sink vertex");
  }
}

std::vector<std::size_t> topological_order(const PlanarNetwork& net) {
  net.validate();
  const std::size_t n = net.vertices.size();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : net.edges) {
    ++indeg[e.to];
    out[e.from].push_back(e.to);
  }
  std::vector<std::size_t> order, ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (auto u : out[v])
      if (--indeg[u] == 0) ready.push_back(u);
  }
  if (order.size() != n) throw DomainError("network has a directed cycle");
  return order;
}

RatMatrix path_matrix(const PlanarNetwork& net) {
  const auto order = topological_order(net);
  const std::size_t n = net.vertices.size();
  std::vector<std::vector<const NetEdge*>> out(n);
  for (const auto& e : net.edges) out[e.from].push_back(&e);
  RatMatrix a(net.sources.size(), net.sinks.size(), Rat(0));
  for (std::size_t i = 0; i < net.sources.size(); ++i) {
    std::vector<Rat> ways(n, Rat(0));
    ways[net.sources[i]] = 1;
    for (auto v : order) {
      if (sgn(ways[v]) == 0) continue;
      for (const NetEdge* e : out[v]) ways[e->to] += ways[v] * e->weight;
    }
    for (std::size_t j = 0; j < net.sinks.size(); ++j) a(i, j) = ways[net.sinks[j]];
  }
  return a;
}

Rat nonintersecting_count(const PlanarNetwork& net, const std::vector<int>& rows, const std::vector<int>& cols,
                          std::size_t path_limit) {
  if (rows.size() != cols.size()) throw DomainError("row and column sets differ in size");
  topological_order(net);  // rejects cycles
  for (int r : rows)
    if (r < 1 || static_cast<std::size_t>(r) > net.sources.size()) throw DomainError("source index out of range");
  for (int c : cols)
    if (c < 1 || static_cast<std::size_t>(c) > net.sinks.size()) throw DomainError("sink index out of range");

  const std::size_t n = net.vertices.size();
  std::vector<std::vector<const NetEdge*>> out(n);
  for (const auto& e : net.edges) out[e.from].push_back(&e);
  std::vector<int> sink_slot(n, -1);
  for (std::size_t k = 0; k < cols.size(); ++k) sink_slot[net.sinks[cols[k] - 1]] = static_cast<int>(k);

  struct Path {
    std::vector<std::size_t> verts;
    int slot;
    Rat weight;
  };
  std::size_t listed = 0;
  std::vector<std::vector<Path>> paths(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<std::size_t> stack{net.sources[rows[k] - 1]};
    std::function<void(Rat)> walk = [&](Rat w) {
      const std::size_t v = stack.back();
      if (sink_slot[v] >= 0) {
        if (++listed > path_limit) throw ResourceError("path enumeration exceeded its limit");
        paths[k].push_back({stack, sink_slot[v], w});
      }
      for (const NetEdge* e : out[v]) {
        stack.push_back(e->to);
        walk(w * e->weight);
        stack.pop_back();
      }
    };
    walk(Rat(1));
  }

  Rat total = 0;
  std::vector<char> used_vertex(n, 0), used_slot(cols.size(), 0);
  std::function<void(std::size_t, Rat)> choose = [&](std::size_t k, Rat w) {
    if (k == rows.size()) {
      total += w;
      return;
    }
    for (const Path& path : paths[k]) {
      if (used_slot[path.slot]) continue;
      bool clash = false;
      for (auto v : path.verts) clash = clash || used_vertex[v];
      if (clash) continue;
      used_slot[path.slot] = 1;
      for (auto v : path.verts) used_vertex[v] = 1;
      choose(k + 1, w * path.weight);
      for (auto v : path.verts) used_vertex[v] = 0;
      used_slot[path.slot] = 0;
    }
  };
  choose(0, Rat(1));
  return total;
}

PlanarNetwork postnikov_network(const CauchonDiagram& c) {
  const int m = static_cast<int>(c.rows()), p = static_cast<int>(c.cols());
  PlanarNetwork net;
  for (int i = 1; i <= m; ++i) net.sources.push_back(net.add_vertex("s" + std::to_string(i), p + 1, i));
  for (int a = 1; a <= p; ++a) net.sinks.push_back(net.add_vertex("t" + std::to_string(a), a, m + 1));
  std::vector<std::vector<long>> dot(m + 1, std::vector<long>(p + 1, -1));
  for (int i = 1; i <= m; ++i)
    for (int a = 1; a <= p; ++a)
      if (c.white(i, a))
        dot[i][a] = static_cast<long>(net.add_vertex("v" + std::to_string(i) + "_" + std::to_string(a), a, i));

  for (int i = 1; i <= m; ++i) {
    std::size_t prev = net.sources[i - 1];
    for (int a = p; a >= 1; --a)
      if (dot[i][a] >= 0) {
        net.add_edge(prev, dot[i][a]);
        prev = dot[i][a];
      }
  }
  for (int a = 1; a <= p; ++a) {
    long prev = -1;
    for (int i = 1; i <= m; ++i)
      if (dot[i][a] >= 0) {
        if (prev >= 0) net.add_edge(prev, dot[i][a]);
        prev = dot[i][a];
      }
    if (prev >= 0) net.add_edge(prev, net.sinks[a - 1]);
  }
  return net;
}

}  // namespace cauchon
