#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycle.hpp"
#include "palette.hpp"
#include "two_sat.hpp"

namespace tricolor {

// Union of mono-sets that share a vertex, restricted to `alive`. Output sets
// are pairwise disjoint, nonempty and ordered by smallest member.
inline MonoSets merge_mono_sets(const MonoSets &z, const VertexSet &alive) {
  std::vector<VertexSet> sets;
  for (const auto &s : z) {
    VertexSet cur = s & alive;
    if (cur.empty())
      continue;
    // absorb every earlier set meeting cur, until nothing changes
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].intersects(cur)) {
          cur |= sets[i];
          sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(i));
          grew = true;
          break;
        }
    }
    sets.push_back(std::move(cur));
  }
  std::sort(sets.begin(), sets.end(),
            [](const VertexSet &a, const VertexSet &b) {
              return a.first() < b.first();
            });
  return sets;
}

// List coloring with lists of size at most 2 and disjoint mono-sets, via
// 2-SAT on the graph with each mono-set contracted.
inline std::optional<Coloring> solve_2sat_lists(const Graph &g,
                                                const VertexSet &alive,
                                                const Palette &p,
                                                const MonoSets &z) {
  const std::size_t n = g.universe();
  for (Vertex v : alive)
    if (p[v].size() == 3)
      throw ContractViolation("solve_2sat_lists: vertex " + std::to_string(v) +
                              " has a list of size 3");
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), Vertex{0});
  VertexSet covered(n);
  for (const auto &s : z) {
    VertexSet s_alive = s & alive;
    if (s_alive.intersects(covered))
      throw ContractViolation("solve_2sat_lists: mono-sets overlap");
    covered |= s_alive;
    Vertex r = s_alive.first();
    for (Vertex v : s_alive)
      rep[v] = r;
  }

  std::vector<ColorSet> list(n, ColorSet::all());
  for (Vertex v : alive)
    list[rep[v]] = list[rep[v]] & p[v];
  std::vector<int> var(n, -1);
  int vars = 0;
  for (Vertex v : alive) {
    if (rep[v] != v)
      continue;
    if (list[v].empty())
      return std::nullopt;
    if (list[v].size() == 2)
      var[v] = vars++;
  }

  TwoSat sat(static_cast<std::size_t>(vars));
  // literal for "class r does not take color k"; -1 encodes constant false,
  // -2 constant true
  auto not_color = [&](Vertex r, Color k) -> int {
    if (!list[r].contains(k))
      return -2;
    if (var[r] < 0)
      return -1;
    // variable true means the smaller color
    return k == list[r].min() ? TwoSat::neg(var[r]) : TwoSat::pos(var[r]);
  };
  for (Vertex u : alive)
    for (Vertex w : g.neighbors(u)) {
      if (w <= u || !alive.contains(w))
        continue;
      Vertex a = rep[u], b = rep[w];
      if (a == b)
        return std::nullopt;
      for (Color k : (list[a] & list[b]).to_vector()) {
        int la = not_color(a, k), lb = not_color(b, k);
        if (la == -1 && lb == -1)
          return std::nullopt;
        if (la == -1)
          sat.add_unit(lb);
        else if (lb == -1)
          sat.add_unit(la);
        else
          sat.add_clause(la, lb);
      }
    }
  auto model = sat.solve();
  if (!model)
    return std::nullopt;
  Coloring c(n);
  for (Vertex v : alive) {
    Vertex r = rep[v];
    if (var[r] < 0)
      c[v] = list[r].min();
    else
      c[v] = (*model)[static_cast<std::size_t>(var[r])] ? list[r].min()
                                                         : list[r].max();
  }
  return c;
}

inline std::optional<Coloring>
solve_2sat_lists(const Graph &g, const Palette &p, const MonoSets &z = {}) {
  return solve_2sat_lists(g, g.vertices(), p, z);
}

// A deleted vertex. When lifting, it takes the smallest color of `allowed`
// unused on its neighbours.
struct LiftStep {
  Vertex vertex;
  ColorSet allowed;
};

// (G', L', Z') over a fixed base graph: G' is the base induced on alive().
// Anchors are the cycles whose component pass is still pending; they travel
// with the restriction so later stages know which cycles to finish.
class Restriction {
public:
  Restriction() = default;
  Restriction(const Graph &base, Palette p)
      : base_(&base), alive_(base.vertices()), palette_(std::move(p)) {}

  const Graph &base() const { return *base_; }
  const VertexSet &alive() const noexcept { return alive_; }
  const Palette &palette() const noexcept { return palette_; }
  Palette &palette() noexcept { return palette_; }
  const MonoSets &mono() const noexcept { return mono_; }
  const std::vector<LiftStep> &lift() const noexcept { return lift_; }
  const std::vector<OrientedCycle> &anchors() const noexcept {
    return anchors_;
  }
  std::vector<OrientedCycle> &anchors() noexcept { return anchors_; }

  ColorSet list(Vertex v) const { return palette_[v]; }
  bool feasible() const { return palette_.feasible_on(alive_); }
  int max_list() const { return palette_.max_list_on(alive_); }
  bool update() { return update_palette(*base_, alive_, palette_); }

  // New restriction with vertices fixed to single colors, updated.
  // Returns nullopt when the result is infeasible.
  std::optional<Restriction>
  fixing(const std::vector<std::pair<Vertex, Color>> &fix) const {
    Restriction r = *this;
    for (const auto &[v, c] : fix) {
      if (!alive_.contains(v))
        continue;
      if (!r.palette_[v].contains(c))
        return std::nullopt;
      r.palette_.fix(v, c);
    }
    if (!r.update())
      return std::nullopt;
    return r;
  }

  // Deletes `drop` (recording lift steps in ascending order) and adds mono
  // sets.
  Restriction deleting(const VertexSet &drop, const MonoSets &add) const {
    Restriction r = *this;
    for (Vertex v : drop)
      if (alive_.contains(v)) {
        r.lift_.push_back({v, palette_[v]});
        r.alive_.erase(v);
      }
    for (const auto &s : add) {
      VertexSet t = s & r.alive_;
      if (t.count() >= 2)
        r.mono_.push_back(std::move(t));
    }
    return r;
  }

  // Extends a coloring of G' to the base graph by replaying deletions newest
  // first.
  Coloring lift_coloring(Coloring c) const {
    for (auto it = lift_.rbegin(); it != lift_.rend(); ++it) {
      ColorSet used;
      for (Vertex w : base_->neighbors(it->vertex))
        if (c.colored(w))
          used.insert(c[w]);
      ColorSet free = ColorSet::all() - used;
      if (free.empty())
        throw InternalInvariantError("lift: no free color for vertex " +
                                     std::to_string(it->vertex));
      ColorSet pref = free & it->allowed;
      c[it->vertex] = pref.empty() ? free.min() : pref.min();
    }
    return c;
  }

private:
  friend Restriction make_restriction(const Restriction &, const VertexSet &,
                                      const Palette &, const MonoSets &,
                                      const std::vector<LiftStep> &);
  const Graph *base_ = nullptr;
  VertexSet alive_;
  Palette palette_;
  MonoSets mono_;
  std::vector<LiftStep> lift_;
  std::vector<OrientedCycle> anchors_;
};

// Checks clauses (a) to (c) of the restriction definition against `parent`:
// (a) keep is a subset of the parent's vertices, (b) lists shrink, (c) every
// parent mono-set cut down to keep lies inside some new mono-set.
inline void validate_restriction(const Restriction &parent,
                                 const Restriction &child) {
  if (!child.alive().is_subset_of(parent.alive()))
    throw ContractViolation("restriction clause (a): kept vertices are not "
                            "a subset of the parent's");
  for (Vertex v : child.alive())
    if (!child.list(v).is_subset_of(parent.list(v)))
      throw ContractViolation("restriction clause (b): list of vertex " +
                              std::to_string(v) + " grew from " +
                              parent.list(v).to_string() + " to " +
                              child.list(v).to_string());
  for (const auto &s : parent.mono()) {
    VertexSet cut = s & child.alive();
    if (cut.count() < 2)
      continue;
    bool inside = false;
    for (const auto &t : child.mono())
      if (cut.is_subset_of(t)) {
        inside = true;
        break;
      }
    if (!inside)
      throw ContractViolation("restriction clause (c): a parent mono-set is "
                              "not covered");
  }
}

inline Restriction make_restriction(const Restriction &parent,
                                    const VertexSet &keep,
                                    const Palette &subpalette,
                                    const MonoSets &mono,
                                    const std::vector<LiftStep> &lift) {
  Restriction r = parent;
  r.alive_ = keep;
  r.palette_ = subpalette;
  r.mono_ = mono;
  r.lift_.insert(r.lift_.end(), lift.begin(), lift.end());
  validate_restriction(parent, r);
  return r;
}

inline std::optional<Coloring> solve_restriction(const Restriction &r) {
  return solve_2sat_lists(r.base(), r.alive(), r.palette(),
                          merge_mono_sets(r.mono(), r.alive()));
}

} // namespace tricolor
