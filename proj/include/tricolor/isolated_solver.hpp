#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "classification.hpp"
#include "list_coloring.hpp"
#include "type_cases.hpp"

namespace tricolor {

// Validates X = X_1 ∪ ... ∪ X_7 on a cleaned graph and returns the
// classification.
inline CycleClassification compute_x_sets(const Graph &g,
                                          const OrientedCycle &c) {
  CycleClassification k = classify_cycle(g, c);
  VertexSet covered = g.empty_set();
  for (int t = 1; t <= 7; ++t)
    covered |= k.x(t);
  VertexSet miss = k.x_all - covered;
  if (!miss.empty())
    throw StructuralDiagnostic("x-cover",
                               "isolated vertex " +
                                   std::to_string(miss.first()) +
                                   " of D lies in no X_i for " + c.to_string(),
                               {miss.first()});
  return k;
}

// ---------------------------------------------------------------------------
// Induced pattern matching

namespace detail {

// Visits every injective assignment of slots to vertices of their domains
// such that the slots induce exactly `edges`. Slot order drives the
// lexicographic order of the tuples.
inline bool match_pattern(
    const Graph &g, const std::vector<VertexSet> &domain,
    const std::vector<std::pair<int, int>> &edges,
    const std::function<bool(const std::vector<Vertex> &)> &visit) {
  const std::size_t n = domain.size();
  std::vector<std::vector<char>> want(n, std::vector<char>(n, 0));
  for (auto [a, b] : edges) {
    want[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    want[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  std::vector<Vertex> tuple;
  std::function<bool(std::size_t)> go = [&](std::size_t j) -> bool {
    if (j == n)
      return visit(tuple);
    for (Vertex v : domain[j]) {
      bool ok = true;
      for (std::size_t p = 0; p < j && ok; ++p)
        ok = tuple[p] != v && g.adjacent(tuple[p], v) == (want[p][j] != 0);
      if (!ok)
        continue;
      tuple.push_back(v);
      bool stop = go(j + 1);
      tuple.pop_back();
      if (stop)
        return true;
    }
    return false;
  };
  return go(0);
}

inline RoleColors role_colors(const OrientedCycle &c, const Palette &p,
                              int i) {
  return RoleColors{p[c.at(i - 2)].min(), p[c.at(i + 2)].min(),
                    p[c.at(i - 1)].min()};
}

// The lists of v_{i-2}, v_{i-1}, v_{i+1}, v_{i+2} realize a good coloring.
inline void require_good(const Restriction &r, const OrientedCycle &c, int i) {
  for (int t : {i - 2, i - 1, i + 1, i + 2})
    if (!r.alive().contains(c.at(t)) || r.list(c.at(t)).size() != 1)
      throw ContractViolation("type stream: " + c.to_string() +
                              " is not fixed around index " +
                              std::to_string(i));
  Color a = r.list(c.at(i - 2)).min(), b = r.list(c.at(i + 2)).min(),
        m = r.list(c.at(i - 1)).min(), p = r.list(c.at(i + 1)).min();
  if (a == b || a == m || b == m || m != p)
    throw ContractViolation("type stream: lists on " + c.to_string() +
                            " are not a good coloring at index " +
                            std::to_string(i));
}

inline VertexSet long_lists(const Restriction &r, const VertexSet &s) {
  VertexSet out(s.universe());
  for (Vertex v : s)
    if (r.alive().contains(v) && r.list(v).size() == 3)
      out.insert(v);
  return out;
}

// Runs the cases of `table` in both orientations, fixing each tuple's
// colors; `accept` filters and emits. Identical palettes are emitted once.
inline bool run_cases(
    const Restriction &parent, const OrientedCycle &c, int i,
    const std::vector<CasePattern> &table,
    const std::function<bool(Restriction &&)> &accept) {
  const Graph &g = parent.base();
  std::vector<Palette> seen;
  for (const auto &cs : table)
    for (int orient = 0; orient < 2; ++orient) {
      OrientedCycle oc = orient == 0 ? c : c.reflected_about(i);
      CycleClassification k = classify_cycle(g, oc);
      RoleColors rc = role_colors(oc, parent.palette(), i);
      std::vector<VertexSet> dom;
      for (const auto &s : cs.slots)
        dom.push_back(region_set(g, k, i, s.region) & parent.alive());
      bool stop = match_pattern(
          g, dom, cs.edges, [&](const std::vector<Vertex> &t) -> bool {
            std::vector<std::pair<Vertex, Color>> fix;
            for (std::size_t j = 0; j < t.size(); ++j)
              if (Color col = rc.of(cs.slots[j].role))
                fix.emplace_back(t[j], col);
            auto r = parent.fixing(fix);
            if (!r)
              return false;
            for (const auto &p : seen)
              if (p == r->palette())
                return false;
            seen.push_back(r->palette());
            return accept(std::move(*r));
          });
      if (stop)
        return true;
    }
  return false;
}

} // namespace detail

// True iff an induced kP3 exists whose P3s have interior in u, one end in
// A_{i-2} ∪ B_{i-1} and the other in A_{i+2} ∪ B_{i+1}.
inline bool has_kp3_matching(const Graph &g, const CycleClassification &k,
                             int i, const VertexSet &u, std::size_t count) {
  if (count == 0)
    return true;
  struct P3 {
    Vertex l, x, r;
  };
  std::vector<P3> all;
  VertexSet left = k.left_side(i), right = k.right_side(i);
  for (Vertex x : u)
    for (Vertex l : g.neighbors(x) & left)
      for (Vertex r : g.neighbors(x) & right)
        if (l != r && !g.adjacent(l, r))
          all.push_back({l, x, r});
  std::vector<P3> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t from) -> bool {
    if (chosen.size() == count)
      return true;
    for (std::size_t j = from; j < all.size(); ++j) {
      const P3 &p = all[j];
      bool ok = true;
      for (const P3 &q : chosen)
        for (Vertex a : {p.l, p.x, p.r})
          for (Vertex b : {q.l, q.x, q.r})
            if (a == b || g.adjacent(a, b))
              ok = false;
      if (!ok)
        continue;
      chosen.push_back(p);
      if (go(j + 1))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  return go(0);
}

// Deletes the alive X_i vertices with lists of size 3 and makes each one's
// two side neighbourhoods mono-sets.
inline Restriction mono_restriction(const Restriction &parent,
                                    const CycleClassification &k, int i,
                                    const VertexSet &among) {
  const Graph &g = parent.base();
  VertexSet drop = detail::long_lists(parent, k.x(i) & among);
  MonoSets add;
  for (Vertex x : drop) {
    add.push_back(g.neighbors(x) & k.left_side(i));
    add.push_back(g.neighbors(x) & k.right_side(i));
  }
  return parent.deleting(drop, add);
}

inline Restriction mono_restriction(const Restriction &parent,
                                    const OrientedCycle &c, int i) {
  CycleClassification k = classify_cycle(parent.base(), c);
  return mono_restriction(parent, k, i, parent.base().vertices());
}

inline bool enumerate_type_a(const Restriction &parent,
                             const OrientedCycle &c, int i,
                             const std::function<bool(Restriction &&)> &visit) {
  detail::require_good(parent, c, i);
  CycleClassification k = classify_cycle(parent.base(), c);
  return detail::run_cases(parent, c, i, type_a_cases(),
                           [&](Restriction &&r) -> bool {
                             if (!detail::long_lists(r, k.x(i)).empty())
                               return false;
                             return visit(std::move(r));
                           });
}

inline bool enumerate_type_b(const Restriction &parent,
                             const OrientedCycle &c, int i,
                             const std::function<bool(Restriction &&)> &visit) {
  detail::require_good(parent, c, i);
  const Graph &g = parent.base();
  CycleClassification k = classify_cycle(g, c);
  Color gamma = parent.list(c.at(i - 1)).min();
  return detail::run_cases(
      parent, c, i, type_b_cases(), [&](Restriction &&r) -> bool {
        VertexSet open = detail::long_lists(r, k.x(i));
        if (has_kp3_matching(g.induced(r.alive()), k, i, open, 2))
          return false;
        if (open.empty())
          return visit(std::move(r));
        Vertex x = open.first();
        if (auto one = r.fixing({{x, gamma}}))
          if (visit(std::move(*one)))
            return true;
        Restriction rest = r;
        rest.palette()[x].erase(gamma);
        if (!rest.update())
          return false;
        return visit(std::move(rest));
      });
}

inline std::vector<Restriction> collect(
    const std::function<bool(const std::function<bool(Restriction &&)> &)>
        &stream) {
  std::vector<Restriction> out;
  stream([&](Restriction &&r) {
    out.push_back(std::move(r));
    return false;
  });
  return out;
}

struct OneSetStats {
  std::size_t branches = 0, type_a = 0, type_b = 0, mono = 0;
};

// Restrictions equivalent to `parent` in which X_i (for C) has no vertex of
// list size 3, up to vertices the derived cycles do not reach. Elements of
// the derived branches carry their cycle C' as an anchor.
inline bool lemma_one_set_restrictions(
    const Restriction &parent, const OrientedCycle &c, int i,
    const std::function<bool(Restriction &&)> &visit,
    OneSetStats *stats = nullptr) {
  const Graph &g = parent.base();
  for (int t = 1; t <= 7; ++t)
    if (!parent.alive().contains(c.at(t)) || parent.list(c.at(t)).size() != 1)
      throw ContractViolation("one_set: " + c.to_string() +
                              " is not fixed on every vertex");
  CycleClassification k = compute_x_sets(g, c);
  VertexSet xbar = detail::long_lists(parent, k.x(i));
  if (xbar.empty())
    return visit(Restriction(parent));
  Color alpha = parent.list(c.at(i - 2)).min();
  Color beta = parent.list(c.at(i + 2)).min();
  if (alpha == beta)
    throw ContractViolation("one_set: v_{i-2} and v_{i+2} share a color, "
                            "so X_i is reducible");
  Color gamma = third_color(alpha, beta);

  if (stats)
    ++stats->mono;
  if (visit(mono_restriction(parent, k, i, g.vertices())))
    return true;

  for (Vertex x : xbar)
    for (Vertex al : g.neighbors(x) & k.left_side(i) & parent.alive())
      for (Vertex ar : g.neighbors(x) & k.right_side(i) & parent.alive())
        for (Color xc : {alpha, beta}) {
          auto lp = parent.fixing({{x, xc}, {al, gamma}, {ar, gamma}});
          if (!lp)
            continue;
          std::array<Vertex, 7> cv{};
          for (int t = 1; t <= 7; ++t)
            cv[static_cast<std::size_t>(t - 1)] = c.at(t);
          auto put = [&](int t, Vertex v) {
            cv[static_cast<std::size_t>(wrap7(t) - 1)] = v;
          };
          put(i - 1, al);
          put(i, x);
          put(i + 1, ar);
          OrientedCycle c2(cv);
          if (!c2.is_induced_in(g))
            throw StructuralDiagnostic("derived-cycle",
                                       c2.to_string() + " is not induced",
                                       {x, al, ar});
          if (stats)
            ++stats->branches;
          auto tag = [&](Restriction &&r) {
            r.anchors().push_back(c2);
            return visit(std::move(r));
          };
          if (enumerate_type_a(*lp, c2, i, [&](Restriction &&r) {
                if (stats)
                  ++stats->type_a;
                return tag(std::move(r));
              }))
            return true;
          if (enumerate_type_b(*lp, c2, i, [&](Restriction &&r) {
                if (stats)
                  ++stats->type_b;
                return tag(std::move(r));
              }))
            return true;
          CycleClassification k2 = classify_cycle(g, c2);
          if (stats)
            ++stats->mono;
          if (tag(mono_restriction(*lp, k2, i, k.x(i))))
            return true;
        }
  return false;
}

} // namespace tricolor
