#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace tricolor {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph. Vertex ids live in [0, universe) and are kept by
// induced subgraphs, so a subgraph can be compared against its parent
// directly. Immutable once built.
class Graph {
public:
  Graph() = default;

  // Throws InputError on self-loops or out-of-range ids; repeated edges are
  // collapsed.
  static Graph from_edges(std::size_t n, const std::vector<Edge> &edges) {
    Graph g(n);
    g.present_ = VertexSet::full(n);
    for (const auto &[u, v] : edges) {
      if (u >= n || v >= n)
        throw InputError("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") references a vertex >= " +
                         std::to_string(n));
      if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
      if (g.rows_[u].contains(v))
        continue;
      g.rows_[u].insert(v);
      g.rows_[v].insert(u);
      ++g.edges_;
    }
    return g;
  }

  std::size_t universe() const noexcept { return rows_.size(); }
  std::size_t order() const noexcept { return present_.count(); }
  std::size_t edge_count() const noexcept { return edges_; }
  const VertexSet &vertices() const noexcept { return present_; }
  bool contains(Vertex v) const noexcept { return present_.contains(v); }

  const VertexSet &neighbors(Vertex v) const {
    require(v);
    return rows_[v];
  }
  std::vector<Vertex> neighbor_list(Vertex v) const {
    return neighbors(v).to_vector();
  }
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }
  bool adjacent(Vertex u, Vertex v) const {
    return contains(u) && contains(v) && rows_[u].contains(v);
  }

  // Closed neighbourhood of a set: S together with every neighbour of S.
  VertexSet closed_neighborhood(const VertexSet &s) const {
    VertexSet out = s & present_;
    for (Vertex v : s)
      if (contains(v))
        out |= rows_[v];
    return out;
  }
  VertexSet open_neighborhood(const VertexSet &s) const {
    return closed_neighborhood(s) - s;
  }

  Graph induced(const VertexSet &keep) const {
    if (keep.universe() != universe())
      throw ContractViolation("induced: vertex set over a foreign universe");
    Graph g(universe());
    g.present_ = keep & present_;
    for (Vertex v : g.present_) {
      g.rows_[v] = rows_[v] & g.present_;
      g.edges_ += g.rows_[v].count();
    }
    g.edges_ /= 2;
    return g;
  }
  Graph without(const VertexSet &drop) const { return induced(present_ - drop); }
  Graph without(Vertex v) const {
    VertexSet keep = present_;
    keep.erase(v);
    return induced(keep);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u : present_)
      for (Vertex v : rows_[u])
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  VertexSet empty_set() const { return VertexSet(universe()); }

  bool operator==(const Graph &o) const {
    return present_ == o.present_ && rows_ == o.rows_;
  }

private:
  explicit Graph(std::size_t n) : present_(n), rows_(n, VertexSet(n)) {}

  void require(Vertex v) const {
    if (!contains(v))
      throw ContractViolation("vertex " + std::to_string(v) +
                              " is not in the graph");
  }

  VertexSet present_;
  std::vector<VertexSet> rows_;
  std::size_t edges_ = 0;
};

inline Graph build_graph(std::size_t n, const std::vector<Edge> &edges) {
  return Graph::from_edges(n, edges);
}

inline Graph induced_subgraph(const Graph &g, const VertexSet &keep) {
  if (keep.universe() != g.universe() || !keep.is_subset_of(g.vertices()))
    throw InputError("induced_subgraph: keep contains unknown vertices");
  return g.induced(keep);
}

} // namespace tricolor
