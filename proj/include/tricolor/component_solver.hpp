#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "classification.hpp"
#include "list_coloring.hpp"

namespace tricolor {

// ---------------------------------------------------------------------------
// Reducibility

struct ReducibleVertex {
  Vertex v;
  Color color;
};
struct ReducibleComponent {
  VertexSet u1, u2;
  Color c1, c2;
};
using Reducible = std::variant<ReducibleVertex, ReducibleComponent>;

namespace detail {

inline bool in_mono(const MonoSets &z, Vertex v) {
  for (const auto &s : z)
    if (s.contains(v))
      return true;
  return false;
}

// Components of G \ N[C] with their two sides; side 0 holds the smallest
// vertex.
struct SidedComponent {
  VertexSet vertices, side0, side1;
};

inline std::vector<SidedComponent> outer_components(const Graph &g,
                                                    const CycleClassification &k) {
  Graph rest = g.without(g.closed_neighborhood(k.on_cycle));
  auto side = bipartition(rest);
  if (!side)
    throw StructuralDiagnostic("bipartite-claim",
                               "G \\ N[C] is not bipartite for " +
                                   k.cycle.to_string());
  std::vector<SidedComponent> out;
  for (auto &comp : connected_components(rest)) {
    SidedComponent sc{comp, g.empty_set(), g.empty_set()};
    for (Vertex v : comp)
      ((*side)[v] == 0 ? sc.side0 : sc.side1).insert(v);
    out.push_back(std::move(sc));
  }
  return out;
}

inline ColorSet union_of_lists(const Palette &p, const VertexSet &s,
                               const VertexSet &alive) {
  ColorSet out;
  for (Vertex v : s)
    if (alive.contains(v))
      out = out | p[v];
  return out;
}

inline bool all_lists_contain(const Palette &p, const VertexSet &s,
                              const VertexSet &alive, Color c) {
  for (Vertex v : s)
    if (alive.contains(v) && !p[v].contains(c))
      return false;
  return true;
}

} // namespace detail

// A reducible vertex or non-trivial component of G \ N[C] whose reduction
// would change the palette. Vertices in mono-sets are never reduced.
inline std::optional<Reducible> find_reducible(const Graph &g,
                                               const VertexSet &alive,
                                               const CycleClassification &k,
                                               const Palette &p,
                                               const MonoSets &z = {}) {
  for (Vertex v : k.d) {
    if (!alive.contains(v) || p[v].size() != 3 || detail::in_mono(z, v))
      continue;
    ColorSet seen = detail::union_of_lists(p, g.neighbors(v), alive);
    ColorSet missing = ColorSet::all() - seen;
    if (!missing.empty())
      return ReducibleVertex{v, missing.min()};
  }
  for (const auto &sc : detail::outer_components(g, k)) {
    if (sc.vertices.count() < 2)
      continue;
    bool touches_mono = false;
    for (Vertex v : sc.vertices)
      if (!alive.contains(v) || detail::in_mono(z, v))
        touches_mono = true;
    if (touches_mono)
      continue;
    for (int flip = 0; flip < 2; ++flip) {
      const VertexSet &u1 = flip ? sc.side1 : sc.side0;
      const VertexSet &u2 = flip ? sc.side0 : sc.side1;
      ColorSet seen1 =
          detail::union_of_lists(p, g.open_neighborhood(u1) & k.nc, alive);
      ColorSet seen2 =
          detail::union_of_lists(p, g.open_neighborhood(u2) & k.nc, alive);
      for (Color i : kColors)
        for (Color j : kColors) {
          if (i == j || seen1.contains(i) || seen2.contains(j))
            continue;
          if (!detail::all_lists_contain(p, u1, alive, i) ||
              !detail::all_lists_contain(p, u2, alive, j))
            continue;
          bool changes = false;
          for (Vertex v : u1)
            changes |= !(p[v] == ColorSet::single(i));
          for (Vertex v : u2)
            changes |= !(p[v] == ColorSet::single(j));
          if (changes)
            return ReducibleComponent{u1, u2, i, j};
        }
    }
  }
  return std::nullopt;
}

inline std::optional<Reducible> find_reducible(const Graph &g,
                                               const CycleClassification &k,
                                               const Palette &p) {
  return find_reducible(g, g.vertices(), k, p);
}

// Applies reductions until none is left, updating after each. An infeasible
// palette is a legal result.
inline Palette make_nonreducible(const Graph &g, const VertexSet &alive,
                                 const CycleClassification &k, Palette p,
                                 const MonoSets &z = {}) {
  if (!update_palette(g, alive, p))
    return p;
  while (auto r = find_reducible(g, alive, k, p, z)) {
    if (auto *rv = std::get_if<ReducibleVertex>(&*r)) {
      p.fix(rv->v, rv->color);
    } else {
      auto &rc = std::get<ReducibleComponent>(*r);
      for (Vertex v : rc.u1)
        p.fix(v, rc.c1);
      for (Vertex v : rc.u2)
        p.fix(v, rc.c2);
    }
    if (!update_palette(g, alive, p))
      break;
  }
  return p;
}

inline Palette make_nonreducible(const Graph &g, const CycleClassification &k,
                                 Palette p) {
  return make_nonreducible(g, g.vertices(), k, std::move(p));
}

// ---------------------------------------------------------------------------
// Partition of the non-trivial components

enum class Q4Case { None, A, B, C1, C2 };

struct HungComponent {
  VertexSet vertices, signed_part, unsigned_part;
  Vertex d1 = 0, d2 = 0; // order-2 components, in witness orientation
  int index = 0;         // witness i, 0 if there is none
  int sign = 0;          // +1 / -1 for the mirrored variants
  Q4Case q4 = Q4Case::None;
};

struct ComponentPartition {
  std::array<std::vector<HungComponent>, 6> w; // w[1..5]
  std::array<std::vector<HungComponent>, 5> q; // q[1..4]

  bool empty() const {
    for (const auto &b : w)
      if (!b.empty())
        return false;
    for (const auto &b : q)
      if (!b.empty())
        return false;
    return true;
  }
};

namespace detail {

inline bool meets(const Graph &g, Vertex v, const VertexSet &s) {
  return g.neighbors(v).intersects(s);
}
inline bool part_meets(const Graph &g, const VertexSet &part,
                       const VertexSet &s) {
  for (Vertex v : part)
    if (meets(g, v, s))
      return true;
  return false;
}
inline VertexSet part_nbhd(const Graph &g, const VertexSet &part,
                           const VertexSet &s) {
  return g.open_neighborhood(part) & s;
}

// Two vertices of `part` seeing B_i and B_{i+delta}.
inline bool signed_pattern(const Graph &g, const CycleClassification &k,
                           const VertexSet &part, int i, int delta) {
  return part_meets(g, part, k.b(i)) && part_meets(g, part, k.b(i + delta));
}

inline bool w_pattern(const Graph &g, const CycleClassification &k, int bucket,
                      Vertex d1, Vertex d2, int i, int &sign) {
  switch (bucket) {
  case 1:
    return meets(g, d1, k.a(i)) && meets(g, d2, k.a(i + 2));
  case 2:
    return meets(g, d1, k.b(i)) && meets(g, d2, k.b(i + 3));
  case 3:
    if (!meets(g, d1, k.b(i)))
      return false;
    if (meets(g, d2, k.a(i + 3))) {
      sign = 1;
      return true;
    }
    if (meets(g, d2, k.a(i - 3))) {
      sign = -1;
      return true;
    }
    return false;
  case 4:
    return meets(g, d1, k.b(i)) && meets(g, d2, k.b(i + 1));
  }
  return false;
}

// Edges of G \ N[C]: a neighbour a_i in A_i of one end is complete to the
// other end's neighbours in A_{i±1}, A_{i±3}, B_{i±2}; a neighbour b_i in
// B_i to those in A_{i±2}, B_{i±1}.
inline void check_edges_near_d(const Graph &g, const CycleClassification &k,
                               const VertexSet &outer) {
  for (Vertex d1 : outer)
    for (Vertex d2 : g.neighbors(d1)) {
      if (!outer.contains(d2))
        continue;
      for (Vertex u : g.neighbors(d1)) {
        VertexSet must = g.empty_set();
        if (int i = k.a_index(u)) {
          must = k.a(i - 1) | k.a(i + 1) | k.a(i - 3) | k.a(i + 3) |
                 k.b(i - 2) | k.b(i + 2);
        } else if (int j = k.b_index(u)) {
          must = k.a(j - 2) | k.a(j + 2) | k.b(j - 1) | k.b(j + 1);
        } else {
          continue;
        }
        for (Vertex w : g.neighbors(d2) & must)
          if (!g.adjacent(u, w))
            throw StructuralDiagnostic(
                "edges-near-D",
                "neighbours " + std::to_string(u) + " and " +
                    std::to_string(w) + " of edge " + std::to_string(d1) +
                    "-" + std::to_string(d2) + " are not adjacent",
                {d1, d2, u, w});
      }
    }
}

inline void classify_q4(const Graph &g, const CycleClassification &k,
                        HungComponent &h) {
  int i = 0;
  for (int t = 1; t <= 7; ++t)
    if (part_meets(g, h.signed_part, k.b(t))) {
      i = t;
      break;
    }
  h.index = i;
  if (i == 0)
    return;
  for (int s : {1, -1})
    if (part_meets(g, h.unsigned_part, k.a(i + 3 * s))) {
      h.q4 = Q4Case::A;
      h.sign = s;
      return;
    }
  for (int s : {1, -1})
    if (part_meets(g, h.unsigned_part, k.b(i + 3 * s))) {
      h.q4 = Q4Case::B;
      h.sign = s;
      return;
    }
  VertexSet nu = part_nbhd(g, h.unsigned_part, k.nc);
  if (nu.is_subset_of(k.b(i - 1) | k.a(i) | k.b(i + 1))) {
    h.q4 = Q4Case::C1;
    if (part_meets(g, h.signed_part, k.a(i + 3)))
      h.sign = 1;
    else if (part_meets(g, h.signed_part, k.a(i - 3)))
      h.sign = -1;
    return;
  }
  if (nu.is_subset_of(k.a(i - 2) | k.b(i - 1) | k.b(i + 1) | k.a(i + 2))) {
    h.q4 = Q4Case::C2;
    VertexSet ns = part_nbhd(g, h.signed_part, k.nc);
    if (ns.is_subset_of(k.a(i - 1) | k.b(i) | k.a(i + 3)))
      h.sign = 1;
    else if (ns.is_subset_of(k.a(i + 1) | k.b(i) | k.a(i - 3)))
      h.sign = -1;
    return;
  }
  throw StructuralDiagnostic("q4-pattern",
                             "unsigned part of a component hung from B_" +
                                 std::to_string(i) +
                                 " has an impossible neighbourhood on " +
                                 k.cycle.to_string(),
                             h.vertices.to_vector());
}

} // namespace detail

// Buckets every non-trivial component of G \ N[C] by first match.
inline ComponentPartition partition_components(const Graph &g,
                                               const CycleClassification &k) {
  ComponentPartition part;
  VertexSet outer = g.empty_set();
  auto comps = detail::outer_components(g, k);
  for (const auto &sc : comps)
    outer |= sc.vertices;
  detail::check_edges_near_d(g, k, outer);

  for (const auto &sc : comps) {
    std::size_t order = sc.vertices.count();
    if (order < 2)
      continue;
    HungComponent h;
    h.vertices = sc.vertices;
    if (order == 2) {
      Vertex p = sc.side0.first(), q = sc.side1.first();
      int bucket = 5;
      for (int b = 1; b <= 4 && bucket == 5; ++b)
        for (int i = 1; i <= 7 && bucket == 5; ++i)
          for (auto [d1, d2] : {std::pair{p, q}, std::pair{q, p}}) {
            int sign = 0;
            if (detail::w_pattern(g, k, b, d1, d2, i, sign)) {
              bucket = b;
              h.d1 = d1;
              h.d2 = d2;
              h.index = i;
              h.sign = sign;
              break;
            }
          }
      if (bucket == 5) {
        h.d1 = p;
        h.d2 = q;
      }
      h.signed_part = VertexSet(g.universe(), {h.d1});
      h.unsigned_part = VertexSet(g.universe(), {h.d2});
      part.w[static_cast<std::size_t>(bucket)].push_back(std::move(h));
      continue;
    }
    int bucket = 4;
    for (int b = 1; b <= 3 && bucket == 4; ++b) {
      int delta = b == 1 ? 1 : (b == 2 ? 3 : 2);
      for (int i = 1; i <= 7 && bucket == 4; ++i)
        for (int flip = 0; flip < 2; ++flip) {
          const VertexSet &u1 = flip ? sc.side1 : sc.side0;
          if (detail::signed_pattern(g, k, u1, i, delta)) {
            bucket = b;
            h.index = i;
            h.signed_part = u1;
            h.unsigned_part = flip ? sc.side0 : sc.side1;
            break;
          }
        }
    }
    if (bucket == 4) {
      // larger side signed; on a tie prefer a side with B-neighbours, then
      // the side of the smallest vertex
      auto b_all = k.nc - [&] {
        VertexSet a = g.empty_set();
        for (int t = 1; t <= 7; ++t)
          a |= k.a(t);
        return a;
      }();
      std::size_t c0 = sc.side0.count(), c1 = sc.side1.count();
      bool pick1 = c1 > c0;
      if (c0 == c1)
        pick1 = !detail::part_meets(g, sc.side0, b_all) &&
                detail::part_meets(g, sc.side1, b_all);
      h.signed_part = pick1 ? sc.side1 : sc.side0;
      h.unsigned_part = pick1 ? sc.side0 : sc.side1;
      detail::classify_q4(g, k, h);
    }
    part.q[static_cast<std::size_t>(bucket)].push_back(std::move(h));
  }
  return part;
}

// ---------------------------------------------------------------------------
// Dominating sets

struct DominatingSets {
  VertexSet t11, t12, t13, t21, t22, t24;
  std::vector<std::pair<Vertex, std::string>> provenance;

  VertexSet all() const { return t11 | t12 | t13 | t21 | t22 | t24; }
};

inline constexpr std::size_t kBoundT11 = 7, kBoundT12 = 28, kBoundT13 = 42,
                             kBoundT21 = 21, kBoundT22 = 14, kBoundT24 = 238;

namespace detail {

struct DomBuilder {
  const Graph &g;
  const CycleClassification &k;
  DominatingSets &out;

  void add(VertexSet &set, std::optional<Vertex> v, const std::string &why) {
    if (!v)
      return;
    if (!set.contains(*v))
      out.provenance.emplace_back(*v, why);
    set.insert(*v);
  }
  static std::optional<Vertex> min_of(const VertexSet &s) {
    if (s.empty())
      return std::nullopt;
    return s.first();
  }
  // Neighbour of cycle vertex v_t, off the cycle, not adjacent to b.
  std::optional<Vertex> witness_off(int t, Vertex b) const {
    VertexSet s = g.neighbors(k.v(t)) - g.neighbors(b) - k.on_cycle;
    s.erase(b);
    return min_of(s);
  }
};

// Index in `cands` whose key set has no strict subset among the others;
// ties by the smallest vertex of the owning component. -1 if empty.
inline int inclusion_minimal(const std::vector<VertexSet> &keys,
                             const std::vector<Vertex> &tie) {
  int best = -1;
  for (std::size_t a = 0; a < keys.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < keys.size() && minimal; ++b)
      if (a != b && keys[b].is_subset_of(keys[a]) && !(keys[b] == keys[a]))
        minimal = false;
    if (!minimal)
      continue;
    if (best < 0 || tie[a] < tie[static_cast<std::size_t>(best)])
      best = static_cast<int>(a);
  }
  return best;
}

// Vertex of `pool` adjacent to every vertex of the chosen part of all
// components but at most one; returns it with the index of the exception
// (-1 if none).
inline std::pair<std::optional<Vertex>, int>
cover_all_but_one(const Graph &g, const VertexSet &pool,
                  const std::vector<VertexSet> &parts) {
  std::optional<Vertex> best;
  int best_miss = -1;
  std::size_t best_count = parts.size() + 1;
  for (Vertex b : pool) {
    std::size_t misses = 0;
    int miss = -1;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (!parts[j].is_subset_of(g.neighbors(b))) {
        ++misses;
        miss = static_cast<int>(j);
      }
    if (misses < best_count) {
      best_count = misses;
      best = b;
      best_miss = miss;
    }
    if (misses == 0)
      break;
  }
  if (best_count > 1)
    return {best, -1};
  return {best, best_count == 1 ? best_miss : -1};
}

} // namespace detail

// T11, T12, T13, T21, T22 from the partition. T24 comes from reduce_q4.
inline DominatingSets build_dominating_sets(const Graph &g,
                                            const CycleClassification &k,
                                            const ComponentPartition &part) {
  DominatingSets ds;
  ds.t11 = ds.t12 = ds.t13 = ds.t21 = ds.t22 = ds.t24 = g.empty_set();
  detail::DomBuilder db{g, k, ds};
  using detail::DomBuilder;

  // W1: the ends are complete to A_i and A_{i+2}.
  for (const auto &h : part.w[1]) {
    db.add(ds.t11, DomBuilder::min_of(k.a(h.index)), "W1 A_i");
    db.add(ds.t11, DomBuilder::min_of(k.a(h.index + 2)), "W1 A_i");
  }

  // W2^i
  for (int i = 1; i <= 7; ++i) {
    std::vector<std::pair<Vertex, Vertex>> fam; // (d1 on B_i, d2 on B_{i+3})
    std::vector<Vertex> tie;
    for (const auto &h : part.w[2])
      for (auto [d1, d2] : {std::pair{h.d1, h.d2}, std::pair{h.d2, h.d1}})
        if (detail::meets(g, d1, k.b(i)) && detail::meets(g, d2, k.b(i + 3))) {
          fam.emplace_back(d1, d2);
          tie.push_back(h.vertices.first());
        }
    if (fam.empty())
      continue;
    std::vector<VertexSet> k1, k2;
    for (auto [d1, d2] : fam) {
      k1.push_back(g.neighbors(d1) & k.b(i));
      k2.push_back(g.neighbors(d2) & k.b(i + 3));
    }
    auto [d1, d2] = fam[static_cast<std::size_t>(detail::inclusion_minimal(k1, tie))];
    auto [e1, e2] = fam[static_cast<std::size_t>(detail::inclusion_minimal(k2, tie))];
    Vertex bi = (g.neighbors(d1) & k.b(i)).first();
    Vertex bi3 = (g.neighbors(d2) & k.b(i + 3)).first();
    Vertex bi_p = (g.neighbors(e1) & k.b(i)).first();
    Vertex bi3_p = (g.neighbors(e2) & k.b(i + 3)).first();
    std::string why = "W2^" + std::to_string(i);
    db.add(ds.t12, bi, why);
    db.add(ds.t12, bi3_p, why);
    db.add(ds.t12, db.witness_off(i + 3, bi3), why);
    db.add(ds.t12, db.witness_off(i, bi_p), why);
  }

  // W3^{i,±}
  for (int i = 1; i <= 7; ++i)
    for (int s : {1, -1}) {
      std::vector<std::pair<Vertex, Vertex>> fam;
      std::vector<Vertex> tie;
      for (const auto &h : part.w[3])
        for (auto [d1, d2] : {std::pair{h.d1, h.d2}, std::pair{h.d2, h.d1}})
          if (detail::meets(g, d1, k.b(i)) &&
              detail::meets(g, d2, k.a(i + 3 * s))) {
            fam.emplace_back(d1, d2);
            tie.push_back(h.vertices.first());
          }
      if (fam.empty())
        continue;
      std::vector<VertexSet> k1, k2;
      for (auto [d1, d2] : fam) {
        k1.push_back(g.neighbors(d1) & k.b(i));
        k2.push_back(g.neighbors(d2) & k.a(i + 3 * s));
      }
      Vertex d1 = fam[static_cast<std::size_t>(detail::inclusion_minimal(k1, tie))].first;
      Vertex e2 = fam[static_cast<std::size_t>(detail::inclusion_minimal(k2, tie))].second;
      Vertex bi = (g.neighbors(d1) & k.b(i)).first();
      std::string why = "W3^" + std::to_string(i) + (s > 0 ? "+" : "-");
      db.add(ds.t13, bi, why);
      db.add(ds.t13, (g.neighbors(e2) & k.a(i + 3 * s)).first(), why);
      db.add(ds.t13, db.witness_off(i, bi), why);
    }

  // Q1^i: b_i, b_{i+1} and an N(C)-neighbour of the unsigned part.
  for (int i = 1; i <= 7; ++i) {
    const HungComponent *first = nullptr;
    for (const auto &h : part.q[1])
      if (detail::signed_pattern(g, k, h.signed_part, i, 1)) {
        first = &h;
        break;
      }
    if (!first)
      continue;
    std::string why = "Q1^" + std::to_string(i);
    for (int off : {0, 1}) {
      for (Vertex x : first->signed_part) {
        VertexSet nb = g.neighbors(x) & k.b(i + off);
        if (!nb.empty()) {
          db.add(ds.t21, nb.first(), why);
          break;
        }
      }
    }
    for (Vertex z : first->unsigned_part) {
      VertexSet nb = g.neighbors(z) & k.nc;
      if (!nb.empty()) {
        db.add(ds.t21, nb.first(), why);
        break;
      }
    }
  }

  // Q2^i has one element; a signed vertex on B_i and an unsigned vertex.
  for (int i = 1; i <= 7; ++i) {
    std::vector<const HungComponent *> fam;
    for (const auto &h : part.q[2])
      if (detail::signed_pattern(g, k, h.signed_part, i, 3))
        fam.push_back(&h);
    if (fam.empty())
      continue;
    if (fam.size() > 1)
      throw StructuralDiagnostic(
          "q2-unique",
          std::to_string(fam.size()) + " components hang from B_" +
              std::to_string(i) + " and B_" + std::to_string(wrap7(i + 3)),
          fam[1]->vertices.to_vector());
    const HungComponent &h = *fam.front();
    std::string why = "Q2^" + std::to_string(i);
    for (Vertex x : h.signed_part)
      if (detail::meets(g, x, k.b(i))) {
        db.add(ds.t22, x, why);
        break;
      }
    db.add(ds.t22, h.unsigned_part.first(), why);
  }
  return ds;
}

namespace detail {

// T24 for the Q4 families that are handled by domination.
inline void build_t24(const Graph &g, const CycleClassification &k,
                      const ComponentPartition &part, DominatingSets &ds) {
  DomBuilder db{g, k, ds};
  for (int i = 1; i <= 7; ++i)
    for (Q4Case cs : {Q4Case::A, Q4Case::B, Q4Case::C1})
      for (int s : {1, -1}) {
        std::vector<const HungComponent *> fam;
        for (const auto &h : part.q[4])
          if (h.index == i && h.q4 == cs && h.sign == s)
            fam.push_back(&h);
        if (fam.empty())
          continue;
        std::string why = std::string("Q4^") + std::to_string(i) +
                          (cs == Q4Case::A ? ",1" : cs == Q4Case::B ? ",2" : ",3,1") +
                          (s > 0 ? "+" : "-");
        std::vector<VertexSet> signed_parts, unsigned_parts;
        for (const auto *h : fam) {
          signed_parts.push_back(h->signed_part);
          unsigned_parts.push_back(h->unsigned_part);
        }
        auto add_edge_of = [&](int idx) {
          if (idx < 0)
            return;
          const HungComponent &h = *fam[static_cast<std::size_t>(idx)];
          db.add(ds.t24, h.signed_part.first(), why);
          db.add(ds.t24, h.unsigned_part.first(), why);
        };
        // vertex of the family's signed parts (outside element `skip`) with
        // inclusion-minimal neighbourhood in `pool`
        auto minimal_signed = [&](int skip, const VertexSet &pool)
            -> std::pair<std::optional<Vertex>, int> {
          std::vector<VertexSet> keys;
          std::vector<Vertex> tie;
          std::vector<std::pair<Vertex, int>> who;
          for (std::size_t j = 0; j < fam.size(); ++j) {
            if (static_cast<int>(j) == skip)
              continue;
            for (Vertex v : fam[j]->signed_part) {
              VertexSet key = g.neighbors(v) & pool;
              if (key.empty())
                continue;
              keys.push_back(key);
              tie.push_back(v);
              who.emplace_back(v, static_cast<int>(j));
            }
          }
          int at = inclusion_minimal(keys, tie);
          if (at < 0)
            return {std::nullopt, -1};
          return {keys[static_cast<std::size_t>(at)].first(),
                  who[static_cast<std::size_t>(at)].second};
        };

        if (cs == Q4Case::A) {
          VertexSet common = k.a(i + 3 * s);
          for (const auto &u : unsigned_parts)
            for (Vertex z : u)
              common &= g.neighbors(z);
          db.add(ds.t24, DomBuilder::min_of(common), why);
          auto [b, k1] = cover_all_but_one(g, k.b(i), signed_parts);
          db.add(ds.t24, b, why);
          add_edge_of(k1);
        } else if (cs == Q4Case::B) {
          auto [b, k1] = cover_all_but_one(g, k.b(i + 3 * s), unsigned_parts);
          db.add(ds.t24, b, why);
          if (b)
            db.add(ds.t24, db.witness_off(i + 3 * s, *b), why);
          add_edge_of(k1);
          auto [vp, k2] = minimal_signed(k1, k.b(i));
          db.add(ds.t24, vp, why);
          if (k2 >= 0)
            db.add(ds.t24,
                   fam[static_cast<std::size_t>(k2)]->unsigned_part.first(),
                   why);
        } else {
          auto [b, k1] = cover_all_but_one(g, k.b(i - s), unsigned_parts);
          db.add(ds.t24, b, why);
          if (b)
            db.add(ds.t24, db.witness_off(i - s, *b), why);
          add_edge_of(k1);
          auto [vp, k2] = minimal_signed(k1, k.a(i + 3 * s));
          (void)k2;
          db.add(ds.t24, vp, why);
        }
      }
}

// Cycle colors must be fixed before the Q3/Q4 reductions.
inline Color cycle_color(const CycleClassification &k, const Palette &p,
                         int t) {
  ColorSet s = p[k.v(t)];
  if (s.size() != 1)
    throw ContractViolation("cycle vertex " + std::to_string(k.v(t)) +
                            " has list " + s.to_string());
  return s.min();
}

inline void remove_from(Palette &p, const VertexSet &part,
                        const VertexSet &alive, Color c) {
  for (Vertex v : part)
    if (alive.contains(v))
      p[v].erase(c);
}

} // namespace detail

// Q3 components: the unsigned part loses the color of v_{i+1}; when v_{i-1},
// v_{i+1} and v_{i+3} agree the signed part takes that color.
inline Palette reduce_q3(const Graph &g, const VertexSet &alive,
                         const CycleClassification &k,
                         const ComponentPartition &part, Palette p) {
  for (const auto &h : part.q[3]) {
    int i = h.index;
    Color c1 = detail::cycle_color(k, p, i + 1);
    Color cm = detail::cycle_color(k, p, i - 1);
    Color c3 = detail::cycle_color(k, p, i + 3);
    detail::remove_from(p, h.unsigned_part, alive, c1);
    if (cm == c1 && c3 == c1)
      for (Vertex v : h.signed_part)
        if (alive.contains(v))
          p[v] = p[v] & ColorSet::single(c1);
  }
  update_palette(g, alive, p);
  return p;
}

inline Palette reduce_q3(const Graph &g, const CycleClassification &k,
                         Palette p) {
  return reduce_q3(g, g.vertices(), k, partition_components(g, k),
                   std::move(p));
}

// Q4: list removals for the (i,3,2) family and the dominating set T24 for
// the rest.
inline std::pair<Palette, VertexSet>
reduce_q4(const Graph &g, const VertexSet &alive,
          const CycleClassification &k, const ComponentPartition &part,
          Palette p) {
  for (const auto &h : part.q[4]) {
    if (h.q4 != Q4Case::C2 || h.sign == 0)
      continue;
    int i = h.index, s = h.sign;
    // in the + orientation U1 sees A_{i-1} ∪ B_i ∪ A_{i+3}
    Color prev = detail::cycle_color(k, p, i - s);
    Color next = detail::cycle_color(k, p, i + s);
    Color here = detail::cycle_color(k, p, i);
    Color next2 = detail::cycle_color(k, p, i + 2 * s);
    if (prev == next && here == next2) {
      detail::remove_from(p, h.signed_part, alive, here);
      detail::remove_from(p, h.unsigned_part, alive, prev);
    }
  }
  update_palette(g, alive, p);
  DominatingSets ds;
  ds.t11 = ds.t12 = ds.t13 = ds.t21 = ds.t22 = ds.t24 = g.empty_set();
  detail::build_t24(g, k, part, ds);
  return {std::move(p), ds.t24};
}

inline std::pair<Palette, VertexSet> reduce_q4(const Graph &g,
                                               const CycleClassification &k,
                                               Palette p) {
  return reduce_q4(g, g.vertices(), k, partition_components(g, k),
                   std::move(p));
}

// ---------------------------------------------------------------------------
// Restriction stream

struct LemmaYStats {
  std::size_t t_size = 0;
  std::size_t emitted = 0;
};

// Feeds `visit` the restrictions whose union is equivalent to `parent` and in
// which no vertex of a non-trivial component of G \ N[C] keeps a list of
// size 3. `visit` returns true to stop; the function returns true if it was
// stopped.
inline bool lemma_y_restrictions(const Restriction &parent,
                                 const OrientedCycle &c,
                                 const std::function<bool(Restriction &&)> &visit,
                                 LemmaYStats *stats = nullptr,
                                 DominatingSets *sets_out = nullptr,
                                 bool strict = true) {
  const Graph &g = parent.base();
  const VertexSet &alive = parent.alive();
  for (int t = 1; t <= 7; ++t)
    if (!alive.contains(c.at(t)) || parent.list(c.at(t)).size() != 1)
      throw ContractViolation("lemma_y: cycle vertex " +
                              std::to_string(c.at(t)) +
                              " is deleted or not fixed");
  CycleClassification k = classify_cycle(g, c);
  ComponentPartition part = partition_components(g, k);

  VertexSet nontrivial = g.empty_set();
  for (std::size_t b = 1; b <= 5; ++b)
    for (const auto &h : part.w[b])
      nontrivial |= h.vertices;
  for (std::size_t b = 1; b <= 4; ++b)
    for (const auto &h : part.q[b])
      nontrivial |= h.vertices;
  for (Vertex v : alive)
    if (strict && parent.list(v).size() == 3 && !nontrivial.contains(v))
      throw ContractViolation("lemma_y: vertex " + std::to_string(v) +
                              " outside the non-trivial components has a "
                              "list of size 3");

  Palette p = parent.palette();
  if (!update_palette(g, alive, p))
    return false;

  auto [p4, t24] = reduce_q4(g, alive, k, part, std::move(p));
  p = std::move(p4);
  if (!p.feasible_on(alive))
    return false;
  p = reduce_q3(g, alive, k, part, std::move(p));
  if (!p.feasible_on(alive))
    return false;

  // W4 and W5 components cannot keep a list of size 3 once L is
  // non-reducible.
  for (std::size_t b : {4u, 5u})
    for (const auto &h : part.w[b])
      for (Vertex v : h.vertices)
        if (alive.contains(v) && p[v].size() == 3)
          throw StructuralDiagnostic("w4-w5",
                                     "vertex " + std::to_string(v) + " of a W" +
                                         std::to_string(b) +
                                         " component keeps a list of size 3 "
                                         "on " + c.to_string(),
                                     {v});

  DominatingSets ds = build_dominating_sets(g, k, part);
  ds.t24 = t24;
  if (ds.t11.count() > kBoundT11 || ds.t12.count() > kBoundT12 ||
      ds.t13.count() > kBoundT13 || ds.t21.count() > kBoundT21 ||
      ds.t22.count() > kBoundT22 || ds.t24.count() > kBoundT24)
    throw StructuralDiagnostic("dominating-bound",
                               "a dominating set exceeds its size bound on " +
                                   c.to_string());
  if (sets_out)
    *sets_out = ds;

  VertexSet targets = g.empty_set();
  for (Vertex v : nontrivial)
    if (alive.contains(v) && p[v].size() == 3)
      targets.insert(v);
  VertexSet t_all = ds.all() & alive;
  std::vector<Vertex> tv;
  for (Vertex t : t_all)
    if (g.neighbors(t).intersects(targets))
      tv.push_back(t);
  for (Vertex v : targets) {
    bool hit = false;
    for (Vertex t : tv)
      hit |= g.adjacent(v, t);
    if (!hit) {
      std::string where = "W/Q";
      for (std::size_t b = 1; b <= 5; ++b)
        for (const auto &h : part.w[b])
          if (h.vertices.contains(v))
            where = "W" + std::to_string(b);
      for (std::size_t b = 1; b <= 4; ++b)
        for (const auto &h : part.q[b])
          if (h.vertices.contains(v))
            where = "Q" + std::to_string(b);
      throw StructuralDiagnostic("domination",
                                 "vertex " + std::to_string(v) + " of a " +
                                     where +
                                     " component keeps a list of size 3 "
                                     "and no dominating neighbour on " +
                                     c.to_string(),
                                 {v});
    }
  }
  if (stats)
    stats->t_size = tv.size();

  Restriction base = make_restriction(parent, alive, p, parent.mono(), {});
  std::function<bool(std::size_t, const Restriction &)> go =
      [&](std::size_t idx, const Restriction &cur) -> bool {
    if (idx == tv.size()) {
      for (Vertex v : nontrivial)
        if (cur.alive().contains(v) && cur.list(v).size() == 3)
          throw InternalInvariantError("lemma_y: list of size 3 survived at " +
                                       std::to_string(v));
      if (stats)
        ++stats->emitted;
      Restriction out = cur;
      return visit(std::move(out));
    }
    Vertex t = tv[idx];
    for (Color col : cur.list(t).to_vector()) {
      auto next = cur.fixing({{t, col}});
      if (!next)
        continue;
      if (go(idx + 1, *next))
        return true;
    }
    return false;
  };
  return go(0, base);
}

inline std::vector<Restriction> collect_lemma_y(const Restriction &parent,
                                                const OrientedCycle &c) {
  std::vector<Restriction> out;
  lemma_y_restrictions(parent, c, [&](Restriction &&r) {
    out.push_back(std::move(r));
    return false;
  });
  return out;
}

} // namespace tricolor
