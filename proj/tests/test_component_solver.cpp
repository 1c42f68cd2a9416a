#include <gtest/gtest.h>

#include <tricolor/cleaning.hpp>
#include <tricolor/component_solver.hpp>
#include <tricolor/generator.hpp>
#include <tricolor/oracle.hpp>

#include "test_util.hpp"

using namespace tricolor;
using namespace tricolor::testing;

namespace {

OrientedCycle base7() {
  return OrientedCycle(std::array<Vertex, 7>{0, 1, 2, 3, 4, 5, 6});
}

// Every proper coloring of the cycle, as updated palettes.
std::vector<Palette> cycle_palettes(const Graph &g, const OrientedCycle &c) {
  std::vector<Palette> out;
  for (int code = 0; code < 2187; ++code) {
    std::array<Color, 7> col{};
    int x = code;
    for (auto &k : col) {
      k = static_cast<Color>(x % 3 + 1);
      x /= 3;
    }
    bool proper = true;
    for (int t = 0; t < 7; ++t)
      proper &= col[t] != col[(t + 1) % 7];
    if (!proper)
      continue;
    Palette p(g.universe());
    for (int t = 0; t < 7; ++t)
      p.fix(c.at(t + 1), col[t]);
    if (update_palette(g, g.vertices(), p))
      out.push_back(p);
  }
  return out;
}

bool colorable_by_oracle(const Restriction &r) {
  if (!r.feasible())
    return false;
  return brute_force_color(r.base().induced(r.alive()), r.palette(), r.mono())
      .has_value();
}

std::optional<Graph> cleaned_member(std::uint64_t seed, const GenParams &gp) {
  try {
    auto cr = clean(generate(seed, gp));
    if (auto *cl = std::get_if<Cleaned>(&cr))
      return cl->graph;
  } catch (const GenerationFailure &) {
  }
  return std::nullopt;
}

VertexSet nontrivial_vertices(const ComponentPartition &part,
                              std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t b = 1; b <= 5; ++b)
    for (const auto &h : part.w[b])
      s |= h.vertices;
  for (std::size_t b = 1; b <= 4; ++b)
    for (const auto &h : part.q[b])
      s |= h.vertices;
  return s;
}

} // namespace

TEST(Reducible, VertexWithShortNeighbourLists) {
  Graph g = cycle_plus(9, 7, {{7, 0}, {8, 7}});
  auto k = classify_cycle(g, base7());
  Palette p(9);
  p.set(7, ColorSet{1, 2});
  auto r = find_reducible(g, k, p);
  ASSERT_TRUE(r);
  auto *v = std::get_if<ReducibleVertex>(&*r);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->v, 8u);
  EXPECT_EQ(v->color, 3);
  Palette q = make_nonreducible(g, k, p);
  EXPECT_EQ(q[8], ColorSet::single(3));
}

TEST(Reducible, FixedCycleAloneIsNot) {
  Graph g = cycle_plus(7, 7);
  auto k = classify_cycle(g, base7());
  Palette p(7);
  for (Vertex t = 0; t < 7; ++t)
    p.fix(t, t == 6 ? 3 : static_cast<Color>(1 + t % 2));
  EXPECT_FALSE(find_reducible(g, k, p));
  EXPECT_EQ(make_nonreducible(g, k, p), p);
}

TEST(Reducible, Component) {
  // d1 = 8 hangs from A_1 (7), d2 = 9 from A_3 (10)
  Graph g = fixture("fig1-W1");
  auto k = classify_cycle(g, base7());
  Palette p(g.universe());
  p.set(7, ColorSet{2, 3});
  p.set(10, ColorSet{1, 3});
  auto r = find_reducible(g, k, p);
  ASSERT_TRUE(r);
  auto *rc = std::get_if<ReducibleComponent>(&*r);
  ASSERT_NE(rc, nullptr);
  Palette q = make_nonreducible(g, k, p);
  EXPECT_EQ(q[8], ColorSet::single(1));
  EXPECT_EQ(q[9], ColorSet::single(2));
  EXPECT_FALSE(find_reducible(g, k, q));
}

TEST(Reducible, MonoSetMembersAreSkipped) {
  Graph g = cycle_plus(9, 7, {{7, 0}, {8, 7}});
  auto k = classify_cycle(g, base7());
  Palette p(9);
  p.set(7, ColorSet{1, 2});
  MonoSets z{VertexSet(9, {8, 3})};
  EXPECT_FALSE(find_reducible(g, g.vertices(), k, p, z));
}

TEST(Reducible, IdempotentAndColorabilityPreserved) {
  GenParams gp;
  gp.family = Family::HungBipartite;
  gp.n_target = 12;
  std::size_t runs = 0, changed = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto cg = cleaned_member(seed, gp);
    if (!cg)
      continue;
    const Graph &g = *cg;
    for (const auto &cyc : enumerate_induced_c7(g)) {
      OrientedCycle c(cyc);
      auto k = classify_cycle(g, c);
      for (const auto &p : cycle_palettes(g, c)) {
        Palette q = make_nonreducible(g, k, p);
        ++runs;
        if (!(q == p))
          ++changed;
        if (!q.feasible_on(g.vertices())) {
          EXPECT_FALSE(brute_force_color(g, p));
          continue;
        }
        EXPECT_EQ(make_nonreducible(g, k, q), q);
        EXPECT_EQ(brute_force_color(g, p).has_value(),
                  brute_force_color(g, q).has_value());
      }
    }
  }
  EXPECT_GT(runs, 500u);
  EXPECT_GT(changed, 100u);
}

TEST(Partition, OrderTwoPanels) {
  {
    Graph g = fixture("fig1-W1");
    auto part = partition_components(g, classify_cycle(g, base7()));
    ASSERT_EQ(part.w[1].size(), 1u);
    EXPECT_EQ(part.w[1][0].index, 1);
    EXPECT_EQ(part.w[1][0].vertices, VertexSet(g.universe(), {8, 9}));
  }
  {
    Graph g = fixture("fig1-W2");
    auto part = partition_components(g, classify_cycle(g, base7()));
    ASSERT_EQ(part.w[2].size(), 1u);
    EXPECT_EQ(part.w[2][0].index, 1);
    EXPECT_TRUE(part.w[1].empty());
  }
  {
    Graph g = fixture("fig1-W3");
    auto part = partition_components(g, classify_cycle(g, base7()));
    ASSERT_EQ(part.w[3].size(), 1u);
  }
}

TEST(Partition, HungK22) {
  {
    Graph g = fixture("Q1-K22-B1B2");
    auto part = partition_components(g, classify_cycle(g, base7()));
    ASSERT_EQ(part.q[1].size(), 1u);
    EXPECT_EQ(part.q[1][0].index, 1);
    EXPECT_EQ(part.q[1][0].vertices.count(), 4u);
    EXPECT_EQ(part.q[1][0].signed_part.count(), 2u);
  }
  {
    Graph g = fixture("Q4-K22-B1B2");
    auto part = partition_components(g, classify_cycle(g, base7()));
    ASSERT_EQ(part.q[4].size(), 1u);
    EXPECT_TRUE(part.q[1].empty());
  }
}

// Once the palette is non-reducible, W4 and W5 components have short lists.
TEST(Partition, W4W5ResolvedByReduction) {
  std::size_t seen = 0;
  for (Family f : {Family::HungBipartite, Family::Fixture}) {
    GenParams gp;
    gp.family = f;
    gp.n_target = 13;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto g = cleaned_member(seed, gp);
      if (!g)
        continue;
      for (const auto &cyc : enumerate_induced_c7(*g)) {
        OrientedCycle c(cyc);
        auto k = classify_cycle(*g, c);
        auto part = partition_components(*g, k);
        if (part.w[4].empty() && part.w[5].empty())
          continue;
        ++seen;
        for (const auto &p0 : cycle_palettes(*g, c)) {
          Palette p = make_nonreducible(*g, k, p0);
          if (!p.feasible_on(g->vertices()))
            continue;
          for (std::size_t b : {4u, 5u})
            for (const auto &h : part.w[b])
              for (Vertex v : h.vertices)
                EXPECT_LE(p[v].size(), 2) << "W" << b;
        }
      }
    }
  }
  EXPECT_GT(seen, 0u);
}

TEST(DominatingSets, BoundsAndEmpty) {
  EXPECT_EQ(kBoundT11, 7u);
  EXPECT_EQ(kBoundT12, 28u);
  EXPECT_EQ(kBoundT13, 42u);
  EXPECT_EQ(kBoundT21, 21u);
  EXPECT_EQ(kBoundT22, 14u);
  EXPECT_EQ(kBoundT24, 238u);

  Graph c7 = cycle_plus(7, 7);
  auto k = classify_cycle(c7, base7());
  auto part = partition_components(c7, k);
  EXPECT_TRUE(part.empty());
  auto ds = build_dominating_sets(c7, k, part);
  EXPECT_TRUE(ds.all().empty());
}

TEST(DominatingSets, W1PanelDominated) {
  Graph g = fixture("fig1-W1");
  auto k = classify_cycle(g, base7());
  auto part = partition_components(g, k);
  auto ds = build_dominating_sets(g, k, part);
  EXPECT_LE(ds.t11.count(), kBoundT11);
  EXPECT_TRUE(ds.t11.is_subset_of(k.a(1) | k.a(3)));
  EXPECT_TRUE(ds.t11.contains(7));
  EXPECT_TRUE(g.open_neighborhood(ds.t11).intersects(part.w[1][0].vertices));
  EXPECT_TRUE((ds.t12 | ds.t13 | ds.t21 | ds.t22 | ds.t24).empty());
}

TEST(ReduceQ, IdentityWithoutComponents) {
  Graph c7 = cycle_plus(7, 7);
  auto k = classify_cycle(c7, base7());
  Palette p(7);
  p.fix(0, 1);
  p = update_palette(c7, p);
  EXPECT_EQ(reduce_q3(c7, k, p), p);
  auto [q, t24] = reduce_q4(c7, k, p);
  EXPECT_EQ(q, p);
  EXPECT_TRUE(t24.empty());
}

TEST(ReduceQ, Q4FixturePreservesColorability) {
  Graph g = fixture("Q4-K22-B1B2");
  auto k = classify_cycle(g, base7());
  std::size_t runs = 0;
  for (const auto &p0 : cycle_palettes(g, base7())) {
    Palette p = make_nonreducible(g, k, p0);
    if (!p.feasible_on(g.vertices()))
      continue;
    auto [q, t24] = reduce_q4(g, k, p);
    EXPECT_LE(t24.count(), kBoundT24);
    bool before = brute_force_color(g, p).has_value();
    bool after = q.feasible_on(g.vertices()) &&
                 brute_force_color(g, q).has_value();
    EXPECT_EQ(before, after);
    ++runs;
  }
  EXPECT_GT(runs, 0u);
}

TEST(ComponentStream, IdentityWithoutComponents) {
  Graph c7 = cycle_plus(7, 7);
  Palette p(7);
  for (Vertex t = 0; t < 7; ++t)
    p.fix(t, t == 6 ? 3 : static_cast<Color>(1 + t % 2));
  Restriction r(c7, p);
  auto out = collect_lemma_y(r, base7());
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].palette(), p);
}

TEST(ComponentStream, Preconditions) {
  Graph g = fixture("theta-X1");
  Palette p(g.universe());
  Restriction r(g, p);
  EXPECT_THROW(collect_lemma_y(r, base7()), ContractViolation);
}

TEST(ComponentStream, W1PanelMatchesOracle) {
  Graph g = fixture("fig1-W1");
  auto k = classify_cycle(g, base7());
  std::size_t runs = 0;
  for (const auto &p0 : cycle_palettes(g, base7())) {
    Palette p = make_nonreducible(g, k, p0);
    if (!p.feasible_on(g.vertices()))
      continue;
    Restriction r(g, p);
    bool parent = colorable_by_oracle(r);
    bool any = false;
    std::size_t n = 0;
    DominatingSets ds;
    lemma_y_restrictions(
        r, base7(),
        [&](Restriction &&e) {
          ++n;
          any |= colorable_by_oracle(e);
          return false;
        },
        nullptr, &ds);
    std::size_t bound = 1;
    for (std::size_t i = 0; i < ds.all().count(); ++i)
      bound *= 3;
    EXPECT_LE(n, bound);
    EXPECT_EQ(parent, any);
    ++runs;
  }
  EXPECT_GT(runs, 0u);
}

TEST(ComponentStream, InfeasibleParentStaysInfeasible) {
  Graph g = fixture("fig1-W1");
  Palette p(g.universe());
  std::array<Color, 7> col{1, 2, 1, 2, 1, 2, 3};
  for (Vertex t = 0; t < 7; ++t)
    p.fix(t, col[t]);
  p = update_palette(g, p);
  // the two ends of the hanging edge must share a color: impossible
  Restriction r0(g, p);
  Restriction r = r0.deleting(g.empty_set(), {VertexSet(g.universe(), {8, 9})});
  ASSERT_FALSE(colorable_by_oracle(r));
  lemma_y_restrictions(r, base7(), [&](Restriction &&e) {
    EXPECT_FALSE(colorable_by_oracle(e));
    return false;
  });
}

TEST(ComponentStream, GeneratedMembersMatchOracle) {
  GenParams gp;
  gp.family = Family::HungBipartite;
  gp.n_target = 13;
  std::size_t runs = 0, with_targets = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto cg = cleaned_member(seed, gp);
    if (!cg)
      continue;
    const Graph &g = *cg;
    for (const auto &cyc : enumerate_induced_c7(g)) {
      OrientedCycle c(cyc);
      auto k = classify_cycle(g, c);
      auto part = partition_components(g, k);
      if (part.empty())
        continue;
      VertexSet inside = nontrivial_vertices(part, g.universe());
      for (const auto &p0 : cycle_palettes(g, c)) {
        Palette p = make_nonreducible(g, k, p0);
        if (!p.feasible_on(g.vertices()))
          continue;
        bool outside_long = false;
        for (Vertex v : g.vertices())
          outside_long |= p[v].size() == 3 && !inside.contains(v);
        if (outside_long)
          continue;
        Restriction r(g, p);
        bool parent = colorable_by_oracle(r);
        bool any = false;
        LemmaYStats st;
        lemma_y_restrictions(
            r, c,
            [&](Restriction &&e) {
              for (Vertex v : inside)
                EXPECT_LE(e.list(v).size(), 2);
              any = colorable_by_oracle(e);
              return any;
            },
            &st);
        EXPECT_EQ(parent, any);
        ++runs;
        with_targets += st.t_size > 0;
      }
    }
  }
  EXPECT_GT(runs, 200u);
  EXPECT_GT(with_targets, 20u);
}
