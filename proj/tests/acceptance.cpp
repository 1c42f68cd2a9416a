// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails.
#include <tricolor/cleaning.hpp>
#include <tricolor/component_solver.hpp>
#include <tricolor/generator.hpp>
#include <tricolor/list_coloring.hpp>
#include <tricolor/membership.hpp>
#include <tricolor/oracle.hpp>
#include <tricolor/pipeline.hpp>

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace tricolor;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string &detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

struct Instance {
  Graph g;
  Family family;
  std::uint64_t seed;
};

// Seeded members of every family with 8 <= n <= 14.
std::vector<Instance> corpus(std::size_t per_family) {
  std::vector<Instance> out;
  const Family fams[] = {Family::Bipartite, Family::CycleAttachments,
                         Family::HungBipartite, Family::Fixture};
  const double dens[] = {0.1, 0.25, 0.4};
  for (Family f : fams) {
    std::size_t made = 0;
    for (std::uint64_t seed = 0; made < per_family && seed < 20 * per_family;
         ++seed) {
      GenParams p;
      p.family = f;
      p.n_target = 8 + seed % 7;
      p.attachment_density = dens[seed % 3];
      try {
        Graph g = generate(seed, p);
        if (g.order() > 14)
          continue;
        out.push_back({std::move(g), f, seed});
        ++made;
      } catch (const GenerationFailure &) {
      }
    }
  }
  return out;
}

std::vector<Palette> cycle_palettes(const Graph &g, const OrientedCycle &c) {
  std::vector<Palette> out;
  for (ColoringType t : {ColoringType::I, ColoringType::II, ColoringType::III})
    for (auto &p : enumerate_cycle_palettes(g, c, t))
      out.push_back(std::move(p));
  return out;
}

std::size_t diagnostics_total = 0, fallback_total = 0;
std::map<std::string, std::size_t> diagnostic_kinds;

void note_diagnostic(const StructuralDiagnostic &e) {
  ++diagnostics_total;
  ++diagnostic_kinds[e.kind()];
  std::fprintf(stderr, "diagnostic: %s\n", e.what());
}

void differential(const std::vector<Instance> &cs) {
  std::size_t agree = 0, verified = 0, colored = 0, slow = 0, ran = 0;
  double worst = 0;
  SolveOptions opt;
  opt.max_seconds = 10;
  for (const auto &in : cs) {
    ++ran;
    bool truth = brute_force_color(in.g).has_value();
    try {
      auto t0 = std::chrono::steady_clock::now();
      SolveResult r = solve(in.g, opt);
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - t0;
      worst = std::max(worst, el.count());
      slow += el.count() > 10.0 || r.verdict == Verdict::BudgetExceeded;
      fallback_total += r.stats.fallback_splits;
      bool got = r.verdict == Verdict::Colored;
      colored += got;
      agree += got == truth && r.verdict != Verdict::NotMember;
      if (r.coloring && verify_coloring(in.g, *r.coloring))
        ++verified;
      else if (!r.coloring)
        ++verified; // nothing to verify
    } catch (const StructuralDiagnostic &e) {
      note_diagnostic(e);
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu instances, %zu agree with the oracle, %zu colored, %zu "
                "verified, worst %.3f s, %zu over budget",
                ran, agree, colored, verified, worst, slow);
  report(1, ran >= 500 && agree == ran && verified == ran && slow == 0, buf);
}

void cleaning(const std::vector<Instance> &cs) {
  std::size_t ran = 0, preserved = 0, post = 0, extended = 0;
  for (const auto &in : cs) {
    if (enumerate_induced_c7(in.g).empty())
      continue;
    ++ran;
    try {
      CleanResult cr = clean(in.g);
      auto &cl = std::get<Cleaned>(cr);
      auto before = brute_force_color(in.g);
      auto after = brute_force_color(cl.graph);
      preserved += before.has_value() == after.has_value();
      post += is_cleaned(cl.graph);
      if (!after || verify_coloring(in.g, extend_coloring(cl.log, *after)))
        ++extended;
    } catch (const StructuralDiagnostic &e) {
      note_diagnostic(e);
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu members with a C7, colorability kept %zu, cleaned "
                "postcondition %zu, extended colorings verified %zu",
                ran, preserved, post, extended);
  report(2, ran >= 200 && preserved == ran && post == ran && extended == ran,
         buf);
}

void two_sat() {
  std::mt19937_64 rng(20261016);
  std::size_t ran = 0, agree = 0, sat = 0, verified = 0;
  for (int it = 0; it < 1500; ++it) {
    std::size_t n = 2 + rng() % 11;
    double pe = 0.1 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (static_cast<double>(rng() % 1000) / 1000.0 < pe)
          e.emplace_back(u, v);
    Graph g = build_graph(n, e);
    Palette p(n);
    for (Vertex v = 0; v < n; ++v) {
      Color a = static_cast<Color>(1 + rng() % 3);
      Color b = static_cast<Color>(1 + rng() % 3);
      p.set(v, rng() % 4 == 0 ? ColorSet{a} : ColorSet{a, b});
    }
    // disjoint mono-sets over a shuffled prefix of the vertices
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v)
      order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    MonoSets z;
    std::size_t pos = 0, sets = rng() % 3;
    for (std::size_t s = 0; s < sets && pos + 2 <= n; ++s) {
      std::size_t len = 2 + rng() % 2;
      VertexSet m(n);
      for (std::size_t q = 0; q < len && pos < n; ++q)
        m.insert(order[pos++]);
      z.push_back(m);
    }
    auto got = solve_2sat_lists(g, g.vertices(), p, z);
    auto want = brute_force_color(g, p, z);
    ++ran;
    agree += got.has_value() == want.has_value();
    if (got) {
      ++sat;
      verified += verify_coloring(g, *got, &p, &z);
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu instances (%zu satisfiable), %zu agree, %zu solutions "
                "verified",
                ran, sat, agree, verified);
  report(3, ran >= 1000 && agree == ran && verified == sat, buf);
}

void dominating(const std::vector<Instance> &cs) {
  std::size_t runs = 0, with_targets = 0, over = 0, graphs = 0;
  std::array<std::size_t, 6> worst{};
  for (const auto &in : cs) {
    if (enumerate_induced_c7(in.g).empty())
      continue;
    try {
      auto cr = clean(in.g);
      const Graph &g = std::get<Cleaned>(cr).graph;
      ++graphs;
      for (const auto &cyc : enumerate_induced_c7(g)) {
        OrientedCycle c(cyc);
        auto k = classify_cycle(g, c);
        if (partition_components(g, k).empty())
          continue;
        for (const auto &p0 : cycle_palettes(g, c)) {
          Palette p = make_nonreducible(g, k, p0);
          if (!p.feasible_on(g.vertices()))
            continue;
          Restriction r(g, p);
          DominatingSets ds;
          LemmaYStats st;
          // a domination failure raises a diagnostic
          lemma_y_restrictions(
              r, c, [](Restriction &&) { return false; }, &st, &ds, false);
          ++runs;
          with_targets += st.t_size > 0;
          std::array<std::size_t, 6> sz{ds.t11.count(), ds.t12.count(),
                                        ds.t13.count(), ds.t21.count(),
                                        ds.t22.count(), ds.t24.count()};
          const std::array<std::size_t, 6> bound{kBoundT11, kBoundT12,
                                                 kBoundT13, kBoundT21,
                                                 kBoundT22, kBoundT24};
          for (std::size_t i = 0; i < 6; ++i) {
            worst[i] = std::max(worst[i], sz[i]);
            over += sz[i] > bound[i];
          }
        }
      }
    } catch (const StructuralDiagnostic &e) {
      note_diagnostic(e);
    }
  }
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%zu runs on %zu cleaned graphs, %zu with targets, largest "
                "sets %zu/%zu/%zu/%zu/%zu/%zu (bounds 7/28/42/21/14/238), %zu "
                "over",
                runs, graphs, with_targets, worst[0], worst[1], worst[2],
                worst[3], worst[4], worst[5], over);
  report(4, runs > 0 && with_targets > 0 && over == 0, buf);
}

void p8_free(const std::vector<Instance> &cs) {
  std::size_t ran = 0, colored = 0, with_c7 = 0;
  for (const auto &in : cs) {
    if (brute_force_structures(in.g).longest_induced_path >= 8)
      continue;
    ++ran;
    with_c7 += !enumerate_induced_c7(in.g).empty();
    try {
      auto r = solve(in.g);
      colored += r.verdict == Verdict::Colored &&
                 verify_coloring(in.g, *r.coloring);
    } catch (const StructuralDiagnostic &e) {
      note_diagnostic(e);
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu P8-free members (%zu with a C7), %zu colored", ran,
                with_c7, colored);
  report(5, ran >= 100 && colored == ran, buf);
}

void bipartite_branch(const std::vector<Instance> &cs) {
  std::size_t ran = 0, ok = 0;
  for (const auto &in : cs) {
    if (!enumerate_induced_c7(in.g).empty())
      continue;
    ++ran;
    auto cr = clean(in.g);
    auto *b = std::get_if<Bipartite>(&cr);
    bool two = b != nullptr && verify_coloring(in.g, b->coloring);
    if (two)
      for (Vertex v : in.g.vertices())
        two &= b->coloring[v] <= 2;
    auto r = solve(in.g);
    ok += two && r.verdict == Verdict::Colored &&
          r.stats.bipartite_components == r.stats.components;
  }
  report(6, ran > 0 && ok == ran,
         std::to_string(ran) + " members without a C7, " + std::to_string(ok) +
             " 2-colored through the bipartite branch");
}

void typology() {
  std::array<std::size_t, 4> by{};
  std::size_t total = 0, unique = 0;
  for (int code = 0; code < 2187; ++code) {
    CycleColors c{};
    int x = code;
    for (auto &k : c) {
      k = static_cast<Color>(x % 3 + 1);
      x /= 3;
    }
    bool proper = true;
    for (std::size_t t = 0; t < 7; ++t)
      proper &= c[t] != c[(t + 1) % 7];
    if (!proper)
      continue;
    ++total;
    std::size_t hits = 0;
    for (ColoringType t :
         {ColoringType::I, ColoringType::II, ColoringType::III}) {
      // does some rotation or reflection match the type's pattern?
      bool m = false;
      for (int s = 0; s < 7 && !m; ++s)
        for (int d : {1, -1}) {
          CycleColors r{};
          for (int q = 0; q < 7; ++q)
            r[static_cast<std::size_t>(q)] =
                c[static_cast<std::size_t>(((s + d * q) % 7 + 7) % 7)];
          m |= detail::has_shape(r, t);
        }
      hits += m;
    }
    unique += hits == 1;
    ++by[static_cast<std::size_t>(classify_c7_coloring(c))];
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%zu colorings, exactly one type for %zu, I=%zu II=%zu III=%zu",
                total, unique, by[1], by[2], by[3]);
  report(7,
         total == 126 && unique == 126 && by[1] == 42 && by[2] == 42 &&
             by[3] == 42,
         buf);
}

void membership() {
  std::mt19937_64 rng(7);
  std::size_t ran = 0, agree = 0, members = 0;
  for (int it = 0; it < 2000; ++it) {
    std::size_t n = 1 + rng() % 9;
    double pe = static_cast<double>(rng() % 100) / 100.0;
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (static_cast<double>(rng() % 1000) / 1000.0 < pe)
          e.emplace_back(u, v);
    Graph g = build_graph(n, e);
    auto census = brute_force_structures(g);
    bool truth = census.longest_induced_path < 10;
    for (auto [len, cnt] : census.induced_cycles)
      if (len % 2 == 1 && len != 7 && cnt > 0)
        truth = false;
    bool got = is_member(g);
    ++ran;
    agree += got == truth;
    members += truth;
  }
  report(8, ran >= 2000 && agree == ran,
         std::to_string(ran) + " random graphs (" + std::to_string(members) +
             " members), " + std::to_string(agree) + " agree");
}

} // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Instance> cs = corpus(160);
  differential(cs);
  cleaning(cs);
  two_sat();
  dominating(cs);
  p8_free(cs);
  bipartite_branch(cs);
  typology();
  membership();
  std::string kinds;
  for (const auto &[k, n] : diagnostic_kinds)
    kinds += " " + k + "=" + std::to_string(n);
  report(9, diagnostics_total == 0 && fallback_total == 0,
         std::to_string(diagnostics_total) + " structural diagnostics" +
             kinds + ", " + std::to_string(fallback_total) +
             " fallback splits");
  std::chrono::duration<double> el = std::chrono::steady_clock::now() - t0;
  std::printf("total %.1f s, %d failing\n", el.count(), failures);
  return failures == 0 ? 0 : 1;
}
