#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "cycle.hpp"
#include "graph.hpp"
#include "palette.hpp"

namespace tricolor {

inline constexpr int kUnreachable = -1;

namespace detail {

// Vertices strictly greater than s.
inline VertexSet above(std::size_t universe, Vertex s) {
  VertexSet out(universe);
  for (std::size_t v = s + 1; v < universe; ++v)
    out.insert(static_cast<Vertex>(v));
  return out;
}

struct PathSearch {
  const Graph &g;
  std::size_t k;
  std::vector<Vertex> path;
  std::optional<std::vector<Vertex>> found;

  // banned: vertices adjacent to or equal to some path vertex other than the
  // last one.
  bool extend(const VertexSet &banned) {
    if (path.size() == k) {
      found = path;
      return true;
    }
    Vertex last = path.back();
    VertexSet next_banned = banned;
    next_banned.insert(last);
    VertexSet cand = g.neighbors(last) - banned;
    next_banned |= g.neighbors(last);
    for (Vertex w : cand) {
      if (w == last)
        continue;
      path.push_back(w);
      // w's neighbours become banned only after the next step, but last's
      // neighbours are banned for anything after w.
      if (extend(next_banned))
        return true;
      path.pop_back();
    }
    return false;
  }
};

} // namespace detail

// First induced path on k vertices, searching from each start in ascending
// order and extending through neighbours in ascending order.
inline std::optional<std::vector<Vertex>> find_induced_path(const Graph &g,
                                                            std::size_t k) {
  if (k == 0)
    return std::vector<Vertex>{};
  detail::PathSearch ps{g, k, {}, std::nullopt};
  for (Vertex s : g.vertices()) {
    ps.path = {s};
    VertexSet banned = g.empty_set();
    if (ps.extend(banned))
      return ps.found;
  }
  return std::nullopt;
}

// Visits each induced cycle of the given length once, as the vertex sequence
// starting at its smallest vertex with p[1] < p[len-1]. Order is
// lexicographic. The visitor returns true to stop.
inline void for_each_induced_cycle(
    const Graph &g, std::size_t len,
    const std::function<bool(const std::vector<Vertex> &)> &visit) {
  if (len < 3)
    return;
  const std::size_t n = g.universe();
  std::vector<Vertex> path;
  std::function<bool(const VertexSet &, const VertexSet &)> grow;
  // banned: the path so far plus neighbours of p[1..size-2]; above: ids > p[0].
  grow = [&](const VertexSet &banned, const VertexSet &above) -> bool {
    Vertex first = path.front();
    Vertex last = path.back();
    VertexSet cand = (g.neighbors(last) & above) - banned;
    bool closing = path.size() + 1 == len;
    if (closing)
      cand &= g.neighbors(first);
    else if (path.size() >= 2)
      cand -= g.neighbors(first);
    VertexSet next_banned = banned;
    if (path.size() >= 2)
      next_banned |= g.neighbors(last);
    for (Vertex w : cand) {
      if (closing) {
        if (w < path[1])
          continue;
        path.push_back(w);
        bool stop = visit(path);
        path.pop_back();
        if (stop)
          return true;
        continue;
      }
      VertexSet nb = next_banned;
      nb.insert(w);
      path.push_back(w);
      if (grow(nb, above))
        return true;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s : g.vertices()) {
    VertexSet above = detail::above(n, s);
    path = {s};
    VertexSet banned(n);
    banned.insert(s);
    if (grow(banned, above))
      return;
  }
}

inline std::vector<CycleC7> enumerate_induced_c7(const Graph &g) {
  std::vector<CycleC7> out;
  for_each_induced_cycle(g, 7, [&](const std::vector<Vertex> &p) {
    std::array<Vertex, 7> a{};
    std::copy(p.begin(), p.end(), a.begin());
    out.push_back(CycleC7{a});
    return false;
  });
  return out;
}

inline std::optional<std::vector<Vertex>>
find_induced_cycle(const Graph &g, std::size_t len) {
  std::optional<std::vector<Vertex>> found;
  for_each_induced_cycle(g, len, [&](const std::vector<Vertex> &p) {
    found = p;
    return true;
  });
  return found;
}

// Lowest (u, v) in id order with u, v non-adjacent and N(u) a subset of N(v).
inline std::optional<std::pair<Vertex, Vertex>>
find_comparable_pair(const Graph &g) {
  for (Vertex u : g.vertices())
    for (Vertex v : g.vertices()) {
      if (u == v || g.adjacent(u, v))
        continue;
      if (g.neighbors(u).is_subset_of(g.neighbors(v)))
        return std::make_pair(u, v);
    }
  return std::nullopt;
}

// BFS distance from a vertex set; kUnreachable for unreachable or absent ids.
inline std::vector<int> distances_from(const Graph &g, const VertexSet &src) {
  if ((src & g.vertices()).empty())
    throw InputError("distances_from: empty source set");
  std::vector<int> dist(g.universe(), kUnreachable);
  std::deque<Vertex> q;
  for (Vertex v : src)
    if (g.contains(v)) {
      dist[v] = 0;
      q.push_back(v);
    }
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(u))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

// Connected components, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph &g) {
  std::vector<VertexSet> out;
  VertexSet seen = g.empty_set();
  for (Vertex s : g.vertices()) {
    if (seen.contains(s))
      continue;
    VertexSet comp = g.empty_set();
    std::vector<Vertex> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (Vertex w : g.neighbors(u))
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Side 0/1 per vertex (the smallest vertex of each component gets side 0),
// or nullopt if some component has an odd cycle. Absent ids get -1.
inline std::optional<std::vector<int>> bipartition(const Graph &g) {
  std::vector<int> side(g.universe(), -1);
  for (Vertex s : g.vertices()) {
    if (side[s] != -1)
      continue;
    side[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          q.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

// Proper coloring with colors 1 and 2 (side 0 gets 1), if one exists.
inline std::optional<Coloring> bipartite_coloring(const Graph &g) {
  auto side = bipartition(g);
  if (!side)
    return std::nullopt;
  Coloring c(g.universe());
  for (Vertex v : g.vertices())
    c[v] = static_cast<Color>((*side)[v] + 1);
  return c;
}

inline bool is_complete_bipartite(const Graph &g, const VertexSet &comp,
                                  const std::vector<int> &side) {
  for (Vertex u : comp)
    for (Vertex v : comp)
      if (u < v && side[u] != side[v] && !g.adjacent(u, v))
        return false;
  return true;
}

} // namespace tricolor
