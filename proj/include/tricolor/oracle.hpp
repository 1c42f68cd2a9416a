#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "classification.hpp"
#include "graph.hpp"
#include "palette.hpp"
#include "type_cases.hpp"

namespace tricolor {

inline constexpr std::size_t kOracleCap = 20;

// Lexicographically least list coloring (vertices ascending, colors
// ascending) with every mono-set monochromatic. Plain backtracking, kept
// independent of the rest of the library.
inline std::optional<Coloring>
brute_force_color(const Graph &g, const Palette &p, const MonoSets &z = {},
                  std::size_t cap = kOracleCap) {
  if (g.order() > cap)
    throw OracleRefusal("oracle refuses graphs with more than " +
                        std::to_string(cap) + " vertices");
  std::vector<Vertex> order = g.vertices().to_vector();
  std::vector<std::vector<std::size_t>> sets_of(g.universe());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (Vertex v : z[i])
      if (g.contains(v))
        sets_of[v].push_back(i);
  Coloring c(g.universe());
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size())
      return true;
    Vertex v = order[k];
    for (Color col : kColors) {
      if (!p[v].contains(col))
        continue;
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (c[w] == col) {
          ok = false;
          break;
        }
      for (std::size_t i : sets_of[v]) {
        if (!ok)
          break;
        for (Vertex w : z[i])
          if (g.contains(w) && c[w] != 0 && c[w] != col) {
            ok = false;
            break;
          }
      }
      if (!ok)
        continue;
      c[v] = col;
      if (go(k + 1))
        return true;
      c[v] = 0;
    }
    return false;
  };
  if (go(0))
    return c;
  return std::nullopt;
}

inline std::optional<Coloring> brute_force_color(const Graph &g) {
  return brute_force_color(g, Palette(g.universe()));
}

// Every proper 3-coloring by a flat walk over all 3^n assignments. Tiny
// graphs only; used to cross-check the backtracking oracle.
inline std::vector<Coloring> flat_enumerate_colorings(const Graph &g,
                                                      std::size_t cap = 8) {
  if (g.order() > cap)
    throw OracleRefusal("flat enumeration refuses more than " +
                        std::to_string(cap) + " vertices");
  std::vector<Vertex> vs = g.vertices().to_vector();
  auto edges = g.edges();
  std::vector<Coloring> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < vs.size(); ++i)
    total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Coloring c(g.universe());
    std::size_t x = code;
    // most significant digit first, so codes run in lexicographic order
    for (std::size_t i = vs.size(); i-- > 0;) {
      c[vs[i]] = static_cast<Color>(x % 3 + 1);
      x /= 3;
    }
    bool ok = true;
    for (const auto &[u, v] : edges)
      if (c[u] == c[v]) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(c);
  }
  return out;
}

// Visits proper 3-colorings in lexicographic order; the visitor returns true
// to stop.
inline void for_each_proper_coloring(
    const Graph &g, const std::function<bool(const Coloring &)> &visit,
    std::size_t cap = kOracleCap) {
  if (g.order() > cap)
    throw OracleRefusal("oracle refuses graphs with more than " +
                        std::to_string(cap) + " vertices");
  std::vector<Vertex> order = g.vertices().to_vector();
  Coloring c(g.universe());
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size())
      return visit(c);
    Vertex v = order[k];
    for (Color col : kColors) {
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (c[w] == col) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
      c[v] = col;
      if (go(k + 1))
        return true;
      c[v] = 0;
    }
    return false;
  };
  go(0);
}

struct StructureCensus {
  std::map<std::size_t, std::size_t> induced_cycles; // length -> count
  std::size_t longest_induced_path = 0;              // vertices
};

// Exhaustive over all vertex subsets: a subset is an induced cycle when it
// is connected and 2-regular, an induced path when connected with degrees
// at most 2 and exactly two ends (or a single vertex).
inline StructureCensus brute_force_structures(const Graph &g,
                                              std::size_t cap = kOracleCap) {
  if (g.order() > cap)
    throw OracleRefusal("structure census refuses more than " +
                        std::to_string(cap) + " vertices");
  std::vector<Vertex> vs = g.vertices().to_vector();
  const std::size_t n = vs.size();
  StructureCensus out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U)
        sub.push_back(vs[i]);
    std::vector<int> deg(sub.size(), 0);
    bool max2 = true;
    std::size_t edges = 0;
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j)
        if (g.adjacent(sub[i], sub[j])) {
          ++deg[i];
          ++deg[j];
          ++edges;
        }
    for (int d : deg)
      if (d > 2)
        max2 = false;
    if (!max2)
      continue;
    // connectivity by flood fill over the subset
    std::vector<char> seen(sub.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < sub.size(); ++j)
        if (!seen[j] && g.adjacent(sub[i], sub[j])) {
          seen[j] = 1;
          ++reached;
          stack.push_back(j);
        }
    }
    if (reached != sub.size())
      continue;
    if (sub.size() >= 3 && edges == sub.size())
      ++out.induced_cycles[sub.size()];
    else if (edges + 1 == sub.size())
      out.longest_induced_path = std::max(out.longest_induced_path, sub.size());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coloring predicates relative to (C, i)

enum class ColoringPredicate { Good, TypeA, TypeB, Mono };

inline bool is_good_at(const OrientedCycle &c, int i, const Coloring &col) {
  Color a = col[c.at(i - 2)], m = col[c.at(i - 1)], b = col[c.at(i + 2)];
  return a != m && a != b && m != b && col[c.at(i + 1)] == m;
}

namespace detail {

// Some case of `table`, in either orientation, is realized by `col`. Plain
// search over all vertices for every slot.
inline bool realizes_case(const Graph &g, const OrientedCycle &c, int i,
                          const Coloring &col,
                          const std::vector<CasePattern> &table) {
  for (int orient = 0; orient < 2; ++orient) {
    OrientedCycle oc = orient == 0 ? c : c.reflected_about(i);
    CycleClassification k = classify_cycle(g, oc);
    RoleColors rc{col[oc.at(i - 2)], col[oc.at(i + 2)], col[oc.at(i + 1)]};
    for (const auto &cs : table) {
      const std::size_t n = cs.slots.size();
      std::vector<VertexSet> region;
      for (const auto &s : cs.slots)
        region.push_back(region_set(g, k, i, s.region));
      std::vector<Vertex> pick;
      std::function<bool()> go = [&]() -> bool {
        std::size_t j = pick.size();
        if (j == n)
          return true;
        for (Vertex v : g.vertices()) {
          if (!region[j].contains(v))
            continue;
          Color want = rc.of(cs.slots[j].role);
          if (want != 0 && col[v] != want)
            continue;
          bool ok = true;
          for (std::size_t q = 0; q < j && ok; ++q) {
            bool edge = false;
            for (auto [x, y] : cs.edges)
              edge |= (static_cast<std::size_t>(x) == q &&
                       static_cast<std::size_t>(y) == j) ||
                      (static_cast<std::size_t>(y) == q &&
                       static_cast<std::size_t>(x) == j);
            ok = pick[q] != v && g.adjacent(pick[q], v) == edge;
          }
          if (!ok)
            continue;
          pick.push_back(v);
          if (go())
            return true;
          pick.pop_back();
        }
        return false;
      };
      if (go())
        return true;
    }
  }
  return false;
}

} // namespace detail

// Every x of X_i within `among` sees one color on each of its two sides.
inline bool mono_condition_holds(const Graph &g, const CycleClassification &k,
                                 int i, const Coloring &col,
                                 const VertexSet &among) {
  for (Vertex x : k.x(i) & among)
    for (const VertexSet &side : {k.left_side(i), k.right_side(i)}) {
      Color seen = 0;
      for (Vertex u : g.neighbors(x) & side) {
        if (seen == 0)
          seen = col[u];
        else if (col[u] != seen)
          return false;
      }
    }
  return true;
}

inline bool satisfies_predicate(const Graph &g, const OrientedCycle &c, int i,
                                const Coloring &col, ColoringPredicate pred,
                                const VertexSet *among = nullptr) {
  switch (pred) {
  case ColoringPredicate::Good:
    return is_good_at(c, i, col);
  case ColoringPredicate::TypeA:
    return is_good_at(c, i, col) &&
           detail::realizes_case(g, c, i, col, type_a_cases());
  case ColoringPredicate::TypeB:
    return is_good_at(c, i, col) &&
           detail::realizes_case(g, c, i, col, type_b_cases());
  case ColoringPredicate::Mono: {
    CycleClassification k = classify_cycle(g, c);
    return mono_condition_holds(g, k, i, col, among ? *among : g.vertices());
  }
  }
  return false;
}

// Least proper coloring (respecting `p` when given) that satisfies the
// predicate.
inline std::optional<Coloring>
coloring_predicate_filter(const Graph &g, const OrientedCycle &c, int i,
                          ColoringPredicate pred, const Palette *p = nullptr,
                          const VertexSet *among = nullptr) {
  std::optional<Coloring> out;
  for_each_proper_coloring(g, [&](const Coloring &col) {
    if (p)
      for (Vertex v : g.vertices())
        if (!(*p)[v].contains(col[v]))
          return false;
    if (!satisfies_predicate(g, c, i, col, pred, among))
      return false;
    out = col;
    return true;
  });
  return out;
}

} // namespace tricolor
