#pragma once

#include <array>
#include <set>
#include <vector>

#include "cycle.hpp"
#include "graph_search.hpp"

namespace tricolor {

// Partition of V(G) relative to an oriented induced 7-cycle C.
// Arrays indexed 1..7 (slot 0 unused); use a(t) / b(t) / x(t) for wrapped
// access.
struct CycleClassification {
  OrientedCycle cycle;
  VertexSet on_cycle;
  std::array<VertexSet, 8> a_sets, b_sets, x_sets;
  VertexSet nc;     // A ∪ B
  VertexSet d1, d2; // distance 2 and 3
  VertexSet d1_prime, d1_double_prime;
  VertexSet far;    // distance >= 4 or unreachable
  VertexSet d;      // V \ N[C]
  VertexSet x_all;  // vertices of D without neighbours in D
  VertexSet y;      // D \ X
  std::vector<int> dist;

  const VertexSet &a(int t) const { return a_sets[wrap7(t)]; }
  const VertexSet &b(int t) const { return b_sets[wrap7(t)]; }
  const VertexSet &x(int t) const { return x_sets[wrap7(t)]; }
  Vertex v(int t) const { return cycle.at(t); }

  // A_{i-2} ∪ B_{i-1} and A_{i+2} ∪ B_{i+1}.
  VertexSet left_side(int i) const { return a(i - 2) | b(i - 1); }
  VertexSet right_side(int i) const { return a(i + 2) | b(i + 1); }

  // Index i with v in A_i (resp. B_i), or 0.
  int a_index(Vertex v) const {
    for (int t = 1; t <= 7; ++t)
      if (a_sets[t].contains(v))
        return t;
    return 0;
  }
  int b_index(Vertex v) const {
    for (int t = 1; t <= 7; ++t)
      if (b_sets[t].contains(v))
        return t;
    return 0;
  }
};

// Classifies every vertex of g against the induced cycle c. A vertex whose
// neighbours on C are neither one vertex nor two at distance two along C
// would close a short odd cycle, so it is reported as a diagnostic.
inline CycleClassification classify_cycle(const Graph &g,
                                          const OrientedCycle &c) {
  if (!c.is_induced_in(g))
    throw ContractViolation("classify_cycle: " + c.to_string() +
                            " is not an induced cycle");
  const std::size_t n = g.universe();
  CycleClassification k;
  k.cycle = c;
  k.on_cycle = c.as_set(n);
  for (auto &s : k.a_sets)
    s = VertexSet(n);
  for (auto &s : k.b_sets)
    s = VertexSet(n);
  for (auto &s : k.x_sets)
    s = VertexSet(n);
  k.nc = k.d1 = k.d2 = k.d1_prime = k.d1_double_prime = k.far = k.d =
      k.x_all = k.y = VertexSet(n);

  for (Vertex x : g.vertices()) {
    if (k.on_cycle.contains(x))
      continue;
    std::vector<int> idx;
    for (int t = 1; t <= 7; ++t)
      if (g.adjacent(x, c.at(t)))
        idx.push_back(t);
    if (idx.empty())
      continue;
    if (idx.size() == 1) {
      k.a_sets[idx[0]].insert(x);
    } else if (idx.size() == 2 && (wrap7(idx[0] + 2) == idx[1] ||
                                   wrap7(idx[1] + 2) == idx[0])) {
      int mid = wrap7(idx[0] + 2) == idx[1] ? idx[0] + 1 : idx[1] + 1;
      k.b_sets[wrap7(mid)].insert(x);
    } else {
      std::vector<Vertex> w{x};
      for (int t : idx)
        w.push_back(c.at(t));
      throw StructuralDiagnostic("class-violation",
                                 "vertex " + std::to_string(x) +
                                     " has a neighbour pattern on " +
                                     c.to_string() +
                                     " that closes a short odd cycle",
                                 w);
    }
    k.nc.insert(x);
  }

  k.dist = distances_from(g, k.on_cycle);
  for (Vertex x : g.vertices()) {
    int dx = k.dist[x];
    if (dx == 2)
      k.d1.insert(x);
    else if (dx == 3)
      k.d2.insert(x);
    else if (dx == kUnreachable || dx >= 4)
      k.far.insert(x);
    if (dx == kUnreachable || dx >= 2)
      k.d.insert(x);
  }
  for (Vertex x : k.d1) {
    if (g.neighbors(x).intersects(k.d2))
      k.d1_double_prime.insert(x);
    else
      k.d1_prime.insert(x);
  }
  for (Vertex x : k.d) {
    if (g.neighbors(x).intersects(k.d))
      k.y.insert(x);
    else
      k.x_all.insert(x);
  }
  for (int i = 1; i <= 7; ++i) {
    VertexSet l = k.left_side(i), r = k.right_side(i);
    for (Vertex x : k.x_all)
      if (g.neighbors(x).intersects(l) && g.neighbors(x).intersects(r))
        k.x_sets[i].insert(x);
  }
  return k;
}

// Edges inside N(C) that would close a C3 or C5 together with C.
inline void check_edges_in_nc(const Graph &g, const CycleClassification &k) {
  auto fail = [&](Vertex u, Vertex v) {
    throw StructuralDiagnostic("edges-in-NC",
                               "edge " + std::to_string(u) + "-" +
                                   std::to_string(v) +
                                   " inside N(C) closes a short odd cycle",
                               {u, v});
  };
  for (Vertex u : k.nc)
    for (Vertex v : g.neighbors(u)) {
      if (v < u || !k.nc.contains(v))
        continue;
      int ai = k.a_index(u), bi = k.b_index(u);
      int aj = k.a_index(v), bj = k.b_index(v);
      auto diff = [](int s, int t) {
        int d = ((s - t) % 7 + 7) % 7;
        return std::min(d, 7 - d);
      };
      if (ai && aj && (diff(ai, aj) == 0 || diff(ai, aj) == 2))
        fail(u, v);
      if (ai && bj && (diff(ai, bj) == 1 || diff(ai, bj) == 3))
        fail(u, v);
      if (bi && aj && (diff(bi, aj) == 1 || diff(bi, aj) == 3))
        fail(u, v);
      if (bi && bj && (diff(bi, bj) == 0 || diff(bi, bj) == 2 ||
                       diff(bi, bj) == 3))
        fail(u, v);
    }
}

struct SignList {
  Vertex owner = 0;
  std::vector<int> indices; // one or two cycle indices in 1..7
  bool is_good = false;
  // Index t whose cycle vertex color the owner copies on extension.
  int source_index = 0;
};

// Sign list of x ∈ D1'': with N(x) ∩ B inside B_{i-1} ∪ B_{i+1},
// T(x) = {i} if both are met, {i-2, i} if only B_{i-1}, {i, i+2} if only
// B_{i+1}.
inline SignList sign_list_of(const Graph &g, const CycleClassification &k,
                             Vertex x) {
  if (!k.d1_double_prime.contains(x))
    throw ContractViolation("sign_list_of: vertex " + std::to_string(x) +
                            " is not in D1''");
  std::vector<int> met;
  for (int t = 1; t <= 7; ++t)
    if (g.neighbors(x).intersects(k.b(t)))
      met.push_back(t);
  SignList s;
  s.owner = x;
  if (met.size() == 1) {
    // only B_j: as {i, i+2} with i = j-1
    int i = wrap7(met[0] - 1);
    s.indices = {i, wrap7(i + 2)};
    s.source_index = i;
    return s;
  }
  if (met.size() == 2) {
    for (int i = 1; i <= 7; ++i)
      if ((met[0] == wrap7(i - 1) && met[1] == wrap7(i + 1)) ||
          (met[1] == wrap7(i - 1) && met[0] == wrap7(i + 1))) {
        s.indices = {i};
        s.is_good = true;
        s.source_index = i;
        return s;
      }
  }
  throw StructuralDiagnostic("sign-list",
                             "neighbours of " + std::to_string(x) +
                                 " in B do not fit B_{i-1} ∪ B_{i+1}",
                             {x});
}

} // namespace tricolor
