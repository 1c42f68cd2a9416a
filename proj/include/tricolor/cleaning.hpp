#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "classification.hpp"
#include "palette.hpp"

namespace tricolor {

enum class StepKind {
  ComparableDeleted,      // copy the color of `source`
  D1DoubleDeleted,        // copy the color of cycle vertex `source`
  D2Deleted,              // any color unused on colored neighbours
  BipartitePartCollapsed, // copy the color of representative `source`
};

struct ExtensionStep {
  StepKind kind;
  Vertex vertex;
  Vertex source = 0;
};

// Undo records of a reduction of `original`, oldest first.
struct ExtensionLog {
  Graph original;
  std::vector<ExtensionStep> steps;
};

// Replays the log newest first. Each record assigns its vertex from colors
// already present; a rule producing a clash is an invariant breach.
inline Coloring extend_coloring(const ExtensionLog &log, Coloring c) {
  const Graph &g = log.original;
  for (auto it = log.steps.rbegin(); it != log.steps.rend(); ++it) {
    const ExtensionStep &s = *it;
    ColorSet used;
    for (Vertex w : g.neighbors(s.vertex))
      if (c.colored(w))
        used.insert(c[w]);
    Color pick = 0;
    if (s.kind == StepKind::D2Deleted) {
      pick = (ColorSet::all() - used).min();
    } else {
      if (!c.colored(s.source))
        throw InternalInvariantError("extend: source " +
                                     std::to_string(s.source) + " of vertex " +
                                     std::to_string(s.vertex) +
                                     " is uncolored");
      pick = c[s.source];
      if (used.contains(pick))
        pick = 0;
    }
    if (pick == 0)
      throw InternalInvariantError("extend: no legal color for vertex " +
                                   std::to_string(s.vertex));
    c[s.vertex] = pick;
  }
  return c;
}

namespace detail {

inline Graph strip_comparable(Graph g, ExtensionLog &log) {
  while (auto pr = find_comparable_pair(g)) {
    log.steps.push_back({StepKind::ComparableDeleted, pr->first, pr->second});
    g = g.without(pr->first);
  }
  return g;
}

// Structural checks on a comparable-free graph: nothing beyond distance 3, D1''
// has no A-neighbours and neither D2 nor D1'' has inner edges, and D1'' sees
// no D1'.
inline void check_basic_claims(const Graph &g, const CycleClassification &k) {
  if (k.far.any())
    throw StructuralDiagnostic("basic-claim",
                               "vertex at distance >= 4 from " +
                                   k.cycle.to_string(),
                               {k.far.first()});
  VertexSet a_all = g.empty_set();
  for (int t = 1; t <= 7; ++t)
    a_all |= k.a(t);
  for (Vertex x : k.d1_double_prime) {
    const VertexSet &nx = g.neighbors(x);
    if (nx.intersects(a_all) || nx.intersects(k.d1_double_prime) ||
        nx.intersects(k.d1_prime))
      throw StructuralDiagnostic("basic-claim",
                                 "D1'' vertex " + std::to_string(x) +
                                     " has an A, D1' or D1'' neighbour",
                                 {x});
  }
  for (Vertex d : k.d2)
    if (g.neighbors(d).intersects(k.d2))
      throw StructuralDiagnostic("basic-claim", "edge inside D2", {d});
}

} // namespace detail

inline std::pair<Graph, ExtensionLog> remove_comparable_pairs(const Graph &g) {
  ExtensionLog log{g, {}};
  Graph out = detail::strip_comparable(g, log);
  return {std::move(out), std::move(log)};
}

// True when, for every induced C7, every vertex lies within distance two of
// C and every component of G \ N[C] is a single vertex or complete
// bipartite, and there is no comparable pair.
inline bool is_cleaned(const Graph &g) {
  if (find_comparable_pair(g))
    return false;
  for (const auto &c : enumerate_induced_c7(g)) {
    OrientedCycle oc(c);
    VertexSet near = g.closed_neighborhood(g.closed_neighborhood(oc.as_set(g.universe())));
    if (!(near == g.vertices()))
      return false;
    Graph rest = g.without(g.closed_neighborhood(oc.as_set(g.universe())));
    auto side = bipartition(rest);
    if (!side)
      return false;
    for (const auto &comp : connected_components(rest))
      if (!is_complete_bipartite(rest, comp, *side))
        return false;
  }
  return true;
}

struct Bipartite {
  Coloring coloring;
};
struct Cleaned {
  Graph graph;
  ExtensionLog log;
};
using CleanResult = std::variant<Bipartite, Cleaned>;

// Reduces a connected member graph to a cleaned induced subgraph whose
// colorings extend back through the log.
inline CleanResult clean(const Graph &g) {
  if (enumerate_induced_c7(g).empty()) {
    auto two = bipartite_coloring(g);
    if (!two)
      throw StructuralDiagnostic("odd-cycle",
                                 "graph has an odd cycle but no induced C7");
    return Bipartite{*two};
  }
  ExtensionLog log{g, {}};
  Graph w = g;
  const std::size_t cap = g.order() + 1;
  for (std::size_t pass = 0;; ++pass) {
    if (pass > cap)
      throw StructuralDiagnostic("cleaning-cap",
                                 "cleaning did not stabilise within |V| passes");
    w = detail::strip_comparable(std::move(w), log);
    bool changed = false;
    for (const auto &cyc : enumerate_induced_c7(w)) {
      OrientedCycle c(cyc);
      CycleClassification k = classify_cycle(w, c);
      detail::check_basic_claims(w, k);

      if (k.d2.any()) {
        // D2 first so that replay, newest first, restores D1'' before D2.
        for (Vertex d : k.d2)
          log.steps.push_back({StepKind::D2Deleted, d, 0});
        for (Vertex x : k.d1_double_prime) {
          SignList s = sign_list_of(w, k, x);
          log.steps.push_back(
              {StepKind::D1DoubleDeleted, x, c.at(s.source_index)});
        }
        w = w.without(k.d2 | k.d1_double_prime);
        changed = true;
        break;
      }

      Graph rest = w.without(w.closed_neighborhood(k.on_cycle));
      auto side = bipartition(rest);
      if (!side)
        throw StructuralDiagnostic("bipartite-claim",
                                   "G \\ N[C] is not bipartite for " +
                                       c.to_string());
      for (const auto &comp : connected_components(rest)) {
        if (is_complete_bipartite(rest, comp, *side))
          continue;
        int s1 = (*side)[comp.first()];
        Vertex keep_u = 0, keep_v = 0;
        bool found = false;
        for (Vertex u : comp) {
          if ((*side)[u] != s1)
            continue;
          for (Vertex v : rest.neighbors(u)) {
            keep_u = u;
            keep_v = v;
            found = true;
            break;
          }
          if (found)
            break;
        }
        if (!found)
          throw InternalInvariantError("collapse: component without edges");
        VertexSet nu = w.neighbors(keep_u) & k.nc;
        VertexSet nv = w.neighbors(keep_v) & k.nc;
        VertexSet drop = w.empty_set();
        for (Vertex x : comp) {
          if (x == keep_u || x == keep_v)
            continue;
          bool same_side = (*side)[x] == s1;
          const VertexSet &want = same_side ? nu : nv;
          if (!((w.neighbors(x) & k.nc) == want))
            throw StructuralDiagnostic(
                "p4-reduction",
                "vertices on one side of a component of G \\ N[C] differ on "
                "N(C)",
                {x, same_side ? keep_u : keep_v});
          log.steps.push_back({StepKind::BipartitePartCollapsed, x,
                               same_side ? keep_u : keep_v});
          drop.insert(x);
        }
        w = w.without(drop);
        changed = true;
        break;
      }
      if (changed)
        break;
    }
    if (!changed)
      break;
  }
  if (!is_cleaned(w) && !enumerate_induced_c7(w).empty())
    throw InternalInvariantError("cleaning finished without the cleaned "
                                 "postcondition");
  return Cleaned{std::move(w), std::move(log)};
}

} // namespace tricolor
