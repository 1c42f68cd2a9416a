#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph_search.hpp"
#include "membership.hpp"

namespace tricolor {

class GenerationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Family {
  Bipartite,        // (a)
  CycleAttachments, // (b)
  HungBipartite,    // (c)
  Fixture,          // (d)
};

struct GenParams {
  std::size_t n_target = 12;
  double attachment_density = 0.15;
  Family family = Family::CycleAttachments;
  std::string fixture; // family (d): empty means a seeded pick
  std::size_t max_attempts = 4000;
};

namespace detail {

// Portable draws on top of mt19937_64 so a seed means the same graph
// everywhere.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : eng() % n; }
  bool chance(double p) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53 < p;
  }
};

struct Builder {
  std::size_t n = 0;
  std::vector<Edge> edges;
  Vertex add() { return static_cast<Vertex>(n++); }
  void link(Vertex u, Vertex v) {
    if (u > v)
      std::swap(u, v);
    for (const auto &e : edges)
      if (e == Edge{u, v})
        return;
    edges.emplace_back(u, v);
  }
  bool linked(Vertex u, Vertex v) const {
    if (u > v)
      std::swap(u, v);
    return std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end();
  }
  Graph graph() const { return build_graph(n, edges); }
};

// v_t of the base cycle has id t-1.
inline Builder base_cycle() {
  Builder b;
  for (int t = 0; t < 7; ++t)
    b.add();
  for (Vertex t = 0; t < 7; ++t)
    b.link(t, (t + 1) % 7);
  return b;
}
inline Vertex cv(int t) { return static_cast<Vertex>(wrap7(t) - 1); }

inline Vertex attach_a(Builder &b, int i) {
  Vertex x = b.add();
  b.link(x, cv(i));
  return x;
}
inline Vertex attach_b(Builder &b, int i) {
  Vertex x = b.add();
  b.link(x, cv(i - 1));
  b.link(x, cv(i + 1));
  return x;
}

inline bool connected(const Graph &g) {
  return connected_components(g).size() <= 1;
}

inline Graph relabel(const Graph &g, Rng &rng) {
  std::vector<Vertex> perm(g.universe());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<Vertex>(i);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<Edge> e;
  for (const auto &[u, v] : g.edges())
    e.emplace_back(perm[u], perm[v]);
  std::sort(e.begin(), e.end());
  return build_graph(g.universe(), e);
}

inline Graph propose_bipartite(Rng &rng, const GenParams &p) {
  std::size_t n = std::max<std::size_t>(p.n_target, 2);
  std::size_t s = 1 + rng.below(n - 1);
  Builder b;
  for (std::size_t i = 0; i < n; ++i)
    b.add();
  // spanning tree across the sides, then random extra cross edges
  for (Vertex v = 1; v < n; ++v) {
    bool left = v < s;
    std::vector<Vertex> cand;
    for (Vertex u = 0; u < v; ++u)
      if ((u < s) != left)
        cand.push_back(u);
    if (cand.empty())
      continue;
    b.link(v, cand[rng.below(cand.size())]);
  }
  if (s < n)
    b.link(0, static_cast<Vertex>(s));
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = static_cast<Vertex>(s); v < n; ++v)
      if (rng.chance(p.attachment_density))
        b.link(u, v);
  return b.graph();
}

inline Graph propose_attachments(Rng &rng, const GenParams &p, Builder b) {
  std::vector<Vertex> extra;
  for (Vertex v = 7; v < b.n; ++v)
    extra.push_back(v);
  while (b.n < p.n_target) {
    std::size_t roll = rng.below(100);
    int i = 1 + static_cast<int>(rng.below(7));
    Vertex x;
    if (roll < 35 || extra.empty()) {
      x = attach_a(b, i);
    } else if (roll < 60) {
      x = attach_b(b, i);
    } else {
      x = b.add();
      std::size_t k = 1 + rng.below(2);
      for (std::size_t j = 0; j < k; ++j)
        b.link(x, extra[rng.below(extra.size())]);
    }
    extra.push_back(x);
  }
  for (std::size_t i = 0; i < extra.size(); ++i)
    for (std::size_t j = i + 1; j < extra.size(); ++j)
      if (rng.chance(p.attachment_density))
        b.link(extra[i], extra[j]);
  return b.graph();
}

inline Graph propose_hung(Rng &rng, const GenParams &p) {
  Builder b = base_cycle();
  std::vector<Vertex> nc;
  auto fresh_nc = [&]() {
    int i = 1 + static_cast<int>(rng.below(7));
    Vertex x = rng.chance(0.5) ? attach_a(b, i) : attach_b(b, i);
    nc.push_back(x);
    return x;
  };
  // fresh attachments only while there is room
  auto pick_nc = [&]() {
    if (b.n < p.n_target && rng.chance(0.4))
      return fresh_nc();
    return nc[rng.below(nc.size())];
  };
  fresh_nc();
  fresh_nc();
  while (b.n + 2 <= p.n_target) {
    std::size_t room = p.n_target - b.n;
    std::size_t s = 1 + rng.below(std::min<std::size_t>(3, room - 1));
    std::size_t t = 1 + rng.below(std::min<std::size_t>(3, room - s));
    if (b.n + s + t > p.n_target)
      break;
    std::vector<Vertex> us, ws;
    for (std::size_t j = 0; j < s; ++j)
      us.push_back(b.add());
    for (std::size_t j = 0; j < t; ++j)
      ws.push_back(b.add());
    for (Vertex u : us)
      for (Vertex w : ws)
        b.link(u, w);
    // one or two N(C)-neighbours per vertex; distinct neighbourhoods keep
    // same-side vertices from being comparable
    for (Vertex x : us)
      for (std::size_t j = 1 + rng.below(2); j > 0; --j)
        b.link(x, pick_nc());
    for (Vertex x : ws)
      for (std::size_t j = 1 + rng.below(2); j > 0; --j)
        b.link(x, pick_nc());
  }
  for (std::size_t i = 0; i < nc.size(); ++i)
    for (std::size_t j = i + 1; j < nc.size(); ++j)
      if (rng.chance(p.attachment_density))
        b.link(nc[i], nc[j]);
  return b.graph();
}

} // namespace detail

// Named configurations over the base cycle v1..v7 (ids 0..6).
inline const std::map<std::string, Graph> &fixtures() {
  static const std::map<std::string, Graph> lib = [] {
    using namespace detail;
    std::map<std::string, Graph> m;
    m["c7"] = base_cycle().graph();
    {
      // W1 panel: d1 sees A_1, d2 sees A_3
      Builder b = base_cycle();
      Vertex a1 = attach_a(b, 1), d1 = b.add(), d2 = b.add(),
             a3 = attach_a(b, 3);
      b.link(a1, d1);
      b.link(d1, d2);
      b.link(d2, a3);
      m["fig1-W1"] = b.graph();
    }
    {
      Builder b = base_cycle();
      Vertex b1 = attach_b(b, 1), d1 = b.add(), d2 = b.add(),
             b4 = attach_b(b, 4);
      b.link(b1, d1);
      b.link(d1, d2);
      b.link(d2, b4);
      m["fig1-W2"] = b.graph();
    }
    {
      Builder b = base_cycle();
      Vertex b1 = attach_b(b, 1), d1 = b.add(), d2 = b.add(),
             a4 = attach_a(b, 4);
      b.link(b1, d1);
      b.link(d1, d2);
      b.link(d2, a4);
      m["fig1-W3"] = b.graph();
    }
    {
      Builder b = base_cycle();
      Vertex b1 = attach_b(b, 1), d1 = b.add(), d2 = b.add(),
             b2 = attach_b(b, 2);
      b.link(b1, d1);
      b.link(d1, d2);
      b.link(d2, b2);
      b.link(b1, b2);
      m["fig1-W4"] = b.graph();
    }
    {
      // x in X_1: v6 - a - x - a' - v3
      Builder b = base_cycle();
      Vertex a = attach_a(b, 6), x = b.add(), a2 = attach_a(b, 3);
      b.link(a, x);
      b.link(x, a2);
      m["theta-X1"] = b.graph();
    }
    {
      // two vertices of X_1 sharing their A_3 neighbour
      Builder b = base_cycle();
      Vertex a = attach_a(b, 6), x = b.add(), a2 = attach_a(b, 3);
      Vertex a3 = attach_a(b, 6), y = b.add();
      b.link(a, x);
      b.link(x, a2);
      b.link(a3, y);
      b.link(y, a2);
      m["theta-X1-twin"] = b.graph();
    }
    {
      // type A case 2 around i = 1: a1 in A_6, w1 in D, a2 in A_2
      Builder b = base_cycle();
      Vertex a1 = attach_a(b, 6), w1 = b.add(), a2 = attach_a(b, 2);
      b.link(a1, w1);
      b.link(w1, a2);
      m["typeA-2"] = b.graph();
    }
    {
      // K_{2,2} hung from B_1 and B_2, one side each
      Builder b = base_cycle();
      Vertex b1 = attach_b(b, 1), b2 = attach_b(b, 2);
      Vertex u1 = b.add(), u2 = b.add(), w1 = b.add(), w2 = b.add();
      for (Vertex u : {u1, u2}) {
        b.link(u, w1);
        b.link(u, w2);
        b.link(u, b1);
      }
      for (Vertex w : {w1, w2})
        b.link(w, b2);
      b.link(b1, b2);
      m["Q4-K22-B1B2"] = b.graph();
    }
    {
      // one side of a K_{2,2} reaches both B_1 and B_2
      Builder b = base_cycle();
      Vertex b1 = attach_b(b, 1), b2 = attach_b(b, 2);
      Vertex u1 = b.add(), u2 = b.add(), w1 = b.add(), w2 = b.add();
      for (Vertex u : {u1, u2})
        for (Vertex w : {w1, w2})
          b.link(u, w);
      b.link(u1, b1);
      b.link(u2, b2);
      m["Q1-K22-B1B2"] = b.graph();
    }
    return m;
  }();
  return lib;
}

inline Graph fixture(const std::string &name) {
  auto it = fixtures().find(name);
  if (it == fixtures().end())
    throw InputError("unknown fixture '" + name + "'");
  return it->second;
}

// Seeded member of the class. Proposals follow the attachment patterns a
// member can have around a 7-cycle and are accepted after a full membership
// check.
inline Graph generate(std::uint64_t seed, const GenParams &p) {
  if (p.n_target > 20 && p.family != Family::Fixture)
    throw InputError("generate: n_target above 20");
  detail::Rng rng(seed);
  for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
    Graph g;
    switch (p.family) {
    case Family::Bipartite:
      g = detail::propose_bipartite(rng, p);
      break;
    case Family::CycleAttachments:
      g = detail::propose_attachments(rng, p, detail::base_cycle());
      break;
    case Family::HungBipartite:
      g = detail::propose_hung(rng, p);
      break;
    case Family::Fixture: {
      std::string name = p.fixture;
      if (name.empty()) {
        std::size_t k = rng.below(fixtures().size());
        auto it = fixtures().begin();
        std::advance(it, static_cast<std::ptrdiff_t>(k));
        name = it->first;
      }
      Graph base = fixture(name);
      detail::Builder b;
      b.n = base.universe();
      b.edges = base.edges();
      g = detail::propose_attachments(rng, p, b);
      break;
    }
    }
    if (!detail::connected(g) || !is_member(g))
      continue;
    if (p.family == Family::CycleAttachments && enumerate_induced_c7(g).empty())
      continue;
    return detail::relabel(g, rng);
  }
  throw GenerationFailure("generate: rejection budget exhausted");
}

} // namespace tricolor
