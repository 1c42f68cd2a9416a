#pragma once

#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cleaning.hpp"
#include "component_solver.hpp"
#include "isolated_solver.hpp"
#include "membership.hpp"

namespace tricolor {

// How a proper 3-coloring sits on an induced 7-cycle. With v_3, v_5, v_7
// sharing the color met three times:
//   I   a b c a c b c
//   II  a b c b c a c
//   III a b c b c b c
enum class ColoringType { I = 1, II = 2, III = 3 };

inline std::string to_string(ColoringType t) {
  switch (t) {
  case ColoringType::I:
    return "I";
  case ColoringType::II:
    return "II";
  case ColoringType::III:
    return "III";
  }
  return "?";
}

using CycleColors = std::array<Color, 7>;

namespace detail {

inline bool has_shape(const CycleColors &c, ColoringType t) {
  Color a = c[0], b = c[1], g = c[2];
  if (a == b || a == g || b == g || c[4] != g || c[6] != g)
    return false;
  switch (t) {
  case ColoringType::I:
    return c[3] == a && c[5] == b;
  case ColoringType::II:
    return c[3] == b && c[5] == a;
  case ColoringType::III:
    return c[3] == b && c[5] == b;
  }
  return false;
}

// Colors read along the cycle starting at offset `s`, direction `dir`.
inline CycleColors read_colors(const CycleColors &c, int s, int dir) {
  CycleColors out{};
  for (int t = 0; t < 7; ++t)
    out[static_cast<std::size_t>(t)] =
        c[static_cast<std::size_t>(((s + dir * t) % 7 + 7) % 7)];
  return out;
}

inline void require_proper(const CycleColors &c) {
  for (int t = 0; t < 7; ++t) {
    Color x = c[static_cast<std::size_t>(t)];
    if (x < 1 || x > 3 || x == c[static_cast<std::size_t>((t + 1) % 7)])
      throw InputError("cycle colors are not a proper 3-coloring of C7");
  }
}

} // namespace detail

inline ColoringType classify_c7_coloring(const CycleColors &c) {
  detail::require_proper(c);
  for (ColoringType t :
       {ColoringType::I, ColoringType::II, ColoringType::III})
    for (int s = 0; s < 7; ++s)
      for (int dir : {1, -1})
        if (detail::has_shape(detail::read_colors(c, s, dir), t))
          return t;
  throw InternalInvariantError("proper coloring of C7 with no type");
}

// All proper colorings of positions 1..7 of the given type, in ascending
// base-3 order.
inline std::vector<CycleColors> cycle_colorings(ColoringType t) {
  std::vector<CycleColors> out;
  for (int code = 0; code < 2187; ++code) {
    CycleColors c{};
    int x = code;
    for (auto &col : c) {
      col = static_cast<Color>(x % 3 + 1);
      x /= 3;
    }
    bool proper = true;
    for (int s = 0; s < 7; ++s)
      proper &= c[static_cast<std::size_t>(s)] !=
                c[static_cast<std::size_t>((s + 1) % 7)];
    if (proper && classify_c7_coloring(c) == t)
      out.push_back(c);
  }
  return out;
}

// Updated palettes fixing `c` to each coloring of type t; infeasible ones are
// dropped.
inline std::vector<Palette> enumerate_cycle_palettes(const Graph &g,
                                                     const OrientedCycle &c,
                                                     ColoringType t) {
  std::vector<Palette> out;
  for (const auto &cc : cycle_colorings(t)) {
    Palette p(g.universe());
    for (int s = 1; s <= 7; ++s)
      p.fix(c.at(s), cc[static_cast<std::size_t>(s - 1)]);
    if (update_palette(g, g.vertices(), p))
      out.push_back(std::move(p));
  }
  return out;
}

// Relabels c so that the colors fixed by p follow the pattern of type t
// from v_1.
inline OrientedCycle normalize_cycle(const OrientedCycle &c, const Palette &p,
                                     ColoringType t) {
  for (int s = 1; s <= 7; ++s)
    for (int dir : {1, -1}) {
      std::array<Vertex, 7> w{};
      CycleColors cc{};
      for (int q = 0; q < 7; ++q) {
        w[static_cast<std::size_t>(q)] = c.at(s + dir * q);
        cc[static_cast<std::size_t>(q)] = p[w[static_cast<std::size_t>(q)]].min();
      }
      if (detail::has_shape(cc, t))
        return OrientedCycle(w);
    }
  throw ContractViolation("normalize_cycle: palette on " + c.to_string() +
                          " is not of type " + to_string(t));
}

// ---------------------------------------------------------------------------

enum class Verdict { Colored, NotColorable, BudgetExceeded, NotMember };

inline std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Colored:
    return "colored";
  case Verdict::NotColorable:
    return "not-colorable";
  case Verdict::BudgetExceeded:
    return "budget-exceeded";
  case Verdict::NotMember:
    return "not-member";
  }
  return "?";
}

struct SolveOptions {
  bool check_membership = true;
  std::size_t max_leaves = 10'000'000;
  double max_seconds = 60.0;

  // TRICOLOR_BUDGET="<leaves>" or "<leaves>,<seconds>".
  static SolveOptions from_env() {
    SolveOptions o;
    if (const char *e = std::getenv("TRICOLOR_BUDGET"))
      o.apply_budget(e);
    return o;
  }
  void apply_budget(const std::string &spec) {
    std::size_t comma = spec.find(',');
    try {
      std::string first = spec.substr(0, comma);
      if (!first.empty())
        max_leaves = std::stoull(first);
      if (comma != std::string::npos)
        max_seconds = std::stod(spec.substr(comma + 1));
    } catch (const std::exception &) {
      throw InputError("budget '" + spec + "' is not <leaves>[,<seconds>]");
    }
  }
};

struct SolveStats {
  std::size_t components = 0, bipartite_components = 0;
  std::size_t palettes = 0;
  std::array<std::size_t, 4> palettes_by_type{};
  std::size_t one_set_calls = 0, lemma_y_calls = 0;
  std::size_t leaves = 0;
  std::size_t fallback_splits = 0; // residual lists of size 3 at a leaf
  ColoringType winning_type = ColoringType::I;
  double seconds = 0;
};

struct SolveResult {
  Verdict verdict = Verdict::NotColorable;
  std::optional<Coloring> coloring;
  MembershipReport membership;
  SolveStats stats;
};

namespace detail {

struct BudgetHit {};

inline Restriction delete_with_mono(const Restriction &r,
                                    const CycleClassification &k, int i,
                                    const VertexSet &drop) {
  const Graph &g = r.base();
  MonoSets add;
  VertexSet d = drop & r.alive();
  for (Vertex x : d) {
    add.push_back(g.neighbors(x) & k.left_side(i));
    add.push_back(g.neighbors(x) & k.right_side(i));
  }
  return r.deleting(d, add);
}

inline bool same_vertex_set(const OrientedCycle &a, const OrientedCycle &b) {
  auto x = a.vertices(), y = b.vertices();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

} // namespace detail

// Streams the restrictions of one cleaned, non-bipartite component.
class ComponentSearch {
public:
  using Clock = std::chrono::steady_clock;

  ComponentSearch(const Graph &g, const SolveOptions &opt, SolveStats &stats)
      : g_(g), opt_(opt), stats_(stats), start_(Clock::now()),
        leaves_at_start_(stats.leaves) {}

  // One palette fixing c0 with a coloring of type t. Type II assumes no
  // coloring gives any cycle type I; type III assumes neither I nor II.
  bool run_palette(ColoringType t, const OrientedCycle &c0, Palette p) {
    ++stats_.palettes;
    ++stats_.palettes_by_type[static_cast<std::size_t>(t)];
    OrientedCycle c = normalize_cycle(c0, p, t);
    Restriction base(g_, std::move(p));
    base.anchors().push_back(c);
    switch (t) {
    case ColoringType::I:
      return type_one(base, c);
    case ColoringType::II:
      return type_two(base, c);
    case ColoringType::III:
      return type_three(base, c);
    }
    return false;
  }

  const std::optional<Coloring> &found() const { return found_; }

  std::optional<Coloring> run() {
    auto cycles = enumerate_induced_c7(g_);
    if (cycles.empty())
      return bipartite_coloring(g_);
    for (ColoringType t : {ColoringType::I, ColoringType::II})
      for (const auto &cyc : cycles)
        if (run_cycle(t, OrientedCycle(cyc)))
          return found_;
    if (run_cycle(ColoringType::III, OrientedCycle(cycles.front())))
      return found_;
    return std::nullopt;
  }

private:
  const Graph &g_;
  const SolveOptions &opt_;
  SolveStats &stats_;
  Clock::time_point start_;
  std::size_t leaves_at_start_;
  std::optional<Coloring> found_;

  Color col(const Restriction &r, const OrientedCycle &c, int t) const {
    return r.list(c.at(t)).min();
  }

  VertexSet xbar(const Restriction &r, const CycleClassification &k,
                 int i) const {
    VertexSet out = g_.empty_set();
    for (Vertex v : k.x(i) & r.alive())
      if (r.list(v).size() == 3)
        out.insert(v);
    return out;
  }

  void expect_empty(const Restriction &r, const CycleClassification &k,
                    std::initializer_list<int> idx, const char *why) const {
    for (int i : idx) {
      VertexSet s = xbar(r, k, i);
      if (!s.empty())
        throw StructuralDiagnostic(
            "x-bar",
            std::string(why) + ": X_" + std::to_string(i) + " keeps vertex " +
                std::to_string(s.first()) + " with a list of size 3 on " +
                k.cycle.to_string(),
            {s.first()});
    }
  }

  OrientedCycle derived(std::array<Vertex, 7> v) const {
    OrientedCycle c(v);
    if (!c.is_induced_in(g_))
      throw StructuralDiagnostic("derived-cycle", c.to_string() +
                                                      " is not induced",
                                 {v[0]});
    return c;
  }

  bool emit(const Restriction &r) { return finish(r, 0); }

  bool one_set(const Restriction &r, const OrientedCycle &c, int i) {
    ++stats_.one_set_calls;
    return lemma_one_set_restrictions(
        r, c, i, [&](Restriction &&e) { return emit(e); });
  }

  // Restriction with the cycle fixed and made non-reducible, or nullopt.
  std::optional<Restriction> rooted(const Restriction &r,
                                    const CycleClassification &k) const {
    Restriction out = r;
    out.palette() =
        make_nonreducible(g_, r.alive(), k, r.palette(), r.mono());
    if (!out.feasible())
      return std::nullopt;
    return out;
  }

  bool run_cycle(ColoringType t, const OrientedCycle &c0) {
    for (Palette &p : enumerate_cycle_palettes(g_, c0, t))
      if (run_palette(t, c0, std::move(p))) {
        stats_.winning_type = t;
        return true;
      }
    return false;
  }

  bool type_one(const Restriction &base, OrientedCycle c) {
    CycleClassification k = compute_x_sets(g_, c);
    auto root = rooted(base, k);
    if (!root)
      return false;
    expect_empty(*root, k, {4, 5, 6}, "type I");
    if (xbar(*root, k, 1).empty() && !xbar(*root, k, 2).empty()) {
      c = c.reflected_about(5);
      k = classify_cycle(g_, c);
      root->anchors().front() = c;
    }
    VertexSet x1 = xbar(*root, k, 1);
    if (x1.empty())
      return ladder_b(*root, c, k);
    expect_empty(*root, k, {2, 3}, "type I with X_1 open");
    if (xbar(*root, k, 7).empty())
      return one_set(*root, c, 1);

    Color alpha = col(*root, c, 1);
    const VertexSet &alive = root->alive();
    for (Vertex x : x1)
      for (Vertex a6 : g_.neighbors(x) & (k.a(6) | k.b(7)) & alive)
        for (Vertex a3 : g_.neighbors(x) & (k.a(3) | k.b(2)) & alive) {
          auto r = root->fixing({{a6, alpha}, {a3, alpha}});
          if (!r)
            continue;
          r->anchors().push_back(
              derived({x, a3, c.at(3), c.at(4), c.at(5), c.at(6), a6}));
          if (one_set(*r, c, 1))
            return true;
        }
    ++stats_.one_set_calls;
    return lemma_one_set_restrictions(*root, c, 7, [&](Restriction &&e) {
      return emit(detail::delete_with_mono(e, k, 1, x1));
    });
  }

  // X_1 and X_2 are settled; handles X_3 and X_7.
  bool ladder_b(const Restriction &root, const OrientedCycle &c,
                const CycleClassification &k) {
    VertexSet x3 = xbar(root, k, 3), x7 = xbar(root, k, 7);
    if (x3.empty() && x7.empty())
      return emit(root);
    if (x7.empty())
      return one_set(root, c, 3);
    if (x3.empty())
      return one_set(root, c, 7);

    Color alpha = col(root, c, 1), beta = col(root, c, 2),
          gamma = col(root, c, 3);
    const VertexSet &alive = root.alive();
    auto far_end = [&](Vertex x, const VertexSet &pool) {
      VertexSet s = g_.neighbors(x) & pool & alive;
      if (s.empty())
        throw StructuralDiagnostic("x-bar",
                                   "vertex " + std::to_string(x) +
                                       " of X has an empty side on " +
                                       c.to_string(),
                                   {x});
      return s.first();
    };
    for (Vertex x : x3)
      for (Vertex a1 : g_.neighbors(x) & k.a(1) & alive) {
        auto r = root.fixing({{a1, gamma}});
        if (!r)
          continue;
        Vertex a5 = far_end(x, k.a(5) | k.b(4));
        r->anchors().push_back(
            derived({x, a5, c.at(5), c.at(6), c.at(7), c.at(1), a1}));
        if (one_set(*r, c, 3))
          return true;
      }
    for (Vertex x : x7)
      for (Vertex a2 : g_.neighbors(x) & k.a(2) & alive) {
        auto r = root.fixing({{a2, gamma}});
        if (!r)
          continue;
        Vertex a5 = far_end(x, k.a(5) | k.b(6));
        r->anchors().push_back(
            derived({x, a5, c.at(5), c.at(4), c.at(3), c.at(2), a2}));
        if (one_set(*r, c, 7))
          return true;
      }
    std::vector<std::pair<Vertex, Color>> fix;
    for (Vertex x : x3)
      for (Vertex a1 : g_.neighbors(x) & k.a(1) & alive)
        fix.emplace_back(a1, beta);
    for (Vertex x : x7)
      for (Vertex a2 : g_.neighbors(x) & k.a(2) & alive)
        fix.emplace_back(a2, alpha);
    auto r = root.fixing(fix);
    return r && emit(*r);
  }

  static VertexSet nbhd_of(const Graph &g, const VertexSet &s,
                           const VertexSet &alive) {
    return g.open_neighborhood(s & alive) & alive;
  }

  bool type_two(const Restriction &base, const OrientedCycle &c) {
    CycleClassification k = compute_x_sets(g_, c);
    const VertexSet &alive = base.alive();
    Color alpha = col(base, c, 1), beta = col(base, c, 2),
          gamma = col(base, c, 3);
    std::vector<std::pair<Vertex, Color>> fix;
    for (Vertex v : nbhd_of(g_, k.x(1), alive) & (k.a(3) | k.b(2)))
      fix.emplace_back(v, beta);
    for (Vertex v : nbhd_of(g_, k.x(2), alive) & (k.a(7) | k.b(1)))
      fix.emplace_back(v, alpha);
    for (Vertex v : (nbhd_of(g_, k.x(4), alive) & (k.a(6) | k.b(5))) |
                        (nbhd_of(g_, k.x(6), alive) & (k.a(4) | k.b(5))))
      fix.emplace_back(v, gamma);
    auto forced = base.fixing(fix);
    if (!forced)
      return false;
    auto root = rooted(*forced, k);
    if (!root)
      return false;
    expect_empty(*root, k, {1, 2, 4, 5, 6}, "type II");
    return ladder_b(*root, c, k);
  }

  bool type_three(const Restriction &base, const OrientedCycle &c) {
    CycleClassification k = compute_x_sets(g_, c);
    Restriction cut = base;
    for (int i : {1, 2, 7})
      cut = detail::delete_with_mono(cut, k, i, k.x(i));
    const VertexSet &alive = cut.alive();
    Color beta = col(cut, c, 2), gamma = col(cut, c, 3);
    std::vector<std::pair<Vertex, Color>> fix;
    for (Vertex v : nbhd_of(g_, k.x(3), alive) & (k.a(5) | k.b(4)))
      fix.emplace_back(v, beta);
    for (Vertex v : nbhd_of(g_, k.x(6), alive) & (k.a(4) | k.b(5)))
      fix.emplace_back(v, gamma);
    auto forced = cut.fixing(fix);
    if (!forced)
      return false;
    auto root = rooted(*forced, k);
    if (!root)
      return false;
    expect_empty(*root, k, {3, 4, 5, 6}, "type III");
    return emit(*root);
  }

  // Applies the dominating-set stage for each pending anchor, then solves.
  bool finish(const Restriction &r, std::size_t j) {
    const auto &anchors = r.anchors();
    if (j == anchors.size())
      return leaf(r);
    const OrientedCycle &a = anchors[j];
    for (std::size_t q = 0; q < j; ++q)
      if (detail::same_vertex_set(anchors[q], a))
        return finish(r, j + 1);
    for (int t = 1; t <= 7; ++t)
      if (!r.alive().contains(a.at(t)))
        return finish(r, j + 1);
    return fix_anchor(r, j, 1);
  }

  bool fix_anchor(const Restriction &r, std::size_t j, int t) {
    if (t == 8)
      return dominate(r, j);
    Vertex v = r.anchors()[j].at(t);
    if (r.list(v).size() == 1)
      return fix_anchor(r, j, t + 1);
    for (Color cc : r.list(v).to_vector())
      if (auto next = r.fixing({{v, cc}}))
        if (fix_anchor(*next, j, t + 1))
          return true;
    return false;
  }

  bool dominate(const Restriction &r, std::size_t j) {
    const OrientedCycle a = r.anchors()[j];
    CycleClassification k = classify_cycle(g_, a);
    auto root = rooted(r, k);
    if (!root)
      return false;
    ++stats_.lemma_y_calls;
    return lemma_y_restrictions(
        *root, a, [&](Restriction &&e) { return finish(e, j + 1); }, nullptr,
        nullptr, false);
  }

  void charge() {
    ++stats_.leaves;
    if (stats_.leaves - leaves_at_start_ > opt_.max_leaves)
      throw detail::BudgetHit{};
    if ((stats_.leaves & 0xff) == 0) {
      std::chrono::duration<double> el = Clock::now() - start_;
      if (el.count() > opt_.max_seconds)
        throw detail::BudgetHit{};
    }
  }

  bool leaf(const Restriction &r) {
    charge();
    if (r.max_list() <= 2) {
      auto sol = solve_restriction(r);
      if (!sol)
        return false;
      found_ = r.lift_coloring(*sol);
      return true;
    }
    ++stats_.fallback_splits;
    Vertex v = 0;
    for (Vertex u : r.alive())
      if (r.list(u).size() == 3) {
        v = u;
        break;
      }
    for (Color cc : kColors)
      if (auto next = r.fixing({{v, cc}}))
        if (leaf(*next))
          return true;
    return false;
  }
};

// Decides 3-colorability of a member of the class, one component at a time.
inline SolveResult solve(const Graph &g,
                         const SolveOptions &opt = SolveOptions::from_env()) {
  auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  auto done = [&](Verdict v) {
    res.verdict = v;
    std::chrono::duration<double> el = std::chrono::steady_clock::now() - t0;
    res.stats.seconds = el.count();
    return res;
  };
  if (opt.check_membership) {
    res.membership = check_membership(g);
    if (!res.membership.member)
      return done(Verdict::NotMember);
  }
  Coloring all(g.universe());
  for (const auto &comp : connected_components(g)) {
    ++res.stats.components;
    Graph h = g.induced(comp);
    CleanResult cr = clean(h);
    Coloring part;
    if (auto *b = std::get_if<Bipartite>(&cr)) {
      ++res.stats.bipartite_components;
      part = b->coloring;
    } else {
      auto &cl = std::get<Cleaned>(cr);
      std::optional<Coloring> got;
      try {
        got = ComponentSearch(cl.graph, opt, res.stats).run();
      } catch (const detail::BudgetHit &) {
        return done(Verdict::BudgetExceeded);
      }
      if (!got)
        return done(Verdict::NotColorable);
      part = extend_coloring(cl.log, *got);
    }
    for (Vertex v : comp)
      all[v] = part[v];
  }
  if (!verify_coloring(g, all))
    throw InternalInvariantError("solve: produced coloring is not proper");
  res.coloring = std::move(all);
  return done(Verdict::Colored);
}

} // namespace tricolor
