#include <CLI11.hpp>

#include <tricolor/generator.hpp>
#include <tricolor/io.hpp>
#include <tricolor/json_io.hpp>
#include <tricolor/oracle.hpp>
#include <tricolor/pipeline.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

using namespace tricolor;

namespace {

std::string path_list(const std::vector<Vertex> &vs) {
  std::string s;
  for (Vertex v : vs)
    s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

void print_report(const MembershipReport &r) {
  std::cout << "member: " << (r.member ? "yes" : "no") << '\n';
  std::cout << "bipartite: " << (r.bipartite ? "yes" : "no") << '\n';
  if (r.bad_cycle)
    std::cout << "odd cycle of length " << r.bad_cycle->size() << ": "
              << path_list(*r.bad_cycle) << '\n';
  if (r.bad_path)
    std::cout << "induced P10: " << path_list(*r.bad_path) << '\n';
}

Family parse_family(const std::string &s) {
  if (s == "a" || s == "bipartite")
    return Family::Bipartite;
  if (s == "b" || s == "attachments")
    return Family::CycleAttachments;
  if (s == "c" || s == "hung")
    return Family::HungBipartite;
  if (s == "d" || s == "fixture")
    return Family::Fixture;
  throw InputError("unknown family '" + s + "' (use a, b, c or d)");
}

int cmd_check(const std::string &path) {
  Graph g = read_dimacs_file(path);
  auto r = check_membership(g);
  print_report(r);
  return r.member ? 0 : 1;
}

struct ColorFlags {
  bool assume_member = false, json = false, stats = false;
  std::string budget;
};

int cmd_color(const std::string &path, const ColorFlags &f) {
  Graph g = read_dimacs_file(path);
  SolveOptions opt = SolveOptions::from_env();
  if (!f.budget.empty())
    opt.apply_budget(f.budget);
  opt.check_membership = !f.assume_member;
  SolveResult r;
  try {
    r = solve(g, opt);
  } catch (const StructuralDiagnostic &e) {
    std::cerr << "not a member: " << e.what() << '\n';
    return 4;
  }
  std::cerr << "verdict: " << to_string(r.verdict) << '\n';
  if (f.stats)
    std::cerr << "components " << r.stats.components << ", palettes "
              << r.stats.palettes << ", leaves " << r.stats.leaves << ", "
              << r.stats.seconds << " s\n";
  switch (r.verdict) {
  case Verdict::Colored:
    if (f.json)
      std::cout << coloring_to_json(g, *r.coloring).dump() << '\n';
    else
      write_coloring(std::cout, g, *r.coloring);
    return 0;
  case Verdict::NotColorable:
    return 1;
  case Verdict::BudgetExceeded:
    return 3;
  case Verdict::NotMember:
    print_report(r.membership);
    return 4;
  }
  return 1;
}

int cmd_verify(const std::string &graph_path, const std::string &col_path,
               bool json) {
  Graph g = read_dimacs_file(graph_path);
  std::ifstream in(col_path);
  if (!in)
    throw InputError("cannot open '" + col_path + "'");
  Coloring c(0);
  if (json) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception &e) {
      throw InputError(col_path + ": " + e.what());
    }
    c = coloring_from_json(j);
  } else {
    c = read_coloring(in, g.order());
  }
  if (c.universe() != g.universe()) {
    std::cout << "invalid: coloring covers " << c.universe()
              << " vertices, graph has " << g.order() << '\n';
    return 1;
  }
  for (Vertex v : g.vertices())
    if (!c.colored(v)) {
      std::cout << "invalid: vertex " << v + 1 << " is uncolored\n";
      return 1;
    }
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) {
      std::cout << "invalid: edge " << u + 1 << " " << v + 1
                << " is monochromatic\n";
      return 1;
    }
  std::cout << "valid\n";
  return 0;
}

struct GenFlags {
  std::uint64_t seed = 0;
  std::size_t size = 12;
  double density = 0.15;
  std::string family = "b", fixture, out;
};

int cmd_generate(const GenFlags &f) {
  GenParams p;
  p.family = parse_family(f.family);
  p.n_target = f.size;
  p.attachment_density = f.density;
  p.fixture = f.fixture;
  Graph g = generate(f.seed, p);
  std::string comment = "family " + f.family + " seed " +
                        std::to_string(f.seed);
  if (f.out.empty()) {
    write_dimacs(std::cout, g, comment);
  } else {
    std::ofstream out(f.out);
    if (!out)
      throw InputError("cannot write '" + f.out + "'");
    write_dimacs(out, g, comment);
  }
  return 0;
}

struct FuzzFlags {
  std::uint64_t seed = 1;
  std::size_t count = 100, size = 12;
  double density = 0.25;
  std::string budget;
};

int cmd_fuzz(const FuzzFlags &f) {
  if (f.size > kOracleCap)
    throw InputError("fuzz: size above the oracle cap of " +
                     std::to_string(kOracleCap));
  SolveOptions opt = SolveOptions::from_env();
  if (!f.budget.empty())
    opt.apply_budget(f.budget);
  const Family fams[] = {Family::Bipartite, Family::CycleAttachments,
                         Family::HungBipartite, Family::Fixture};
  std::size_t ran = 0, skipped = 0, mismatches = 0, colored = 0, budget = 0,
              diagnostics = 0;
  std::vector<double> times;
  for (std::size_t i = 0; i < f.count; ++i) {
    GenParams p;
    p.family = fams[i % 4];
    p.n_target = f.size;
    p.attachment_density = f.density;
    std::uint64_t seed = f.seed + i;
    Graph g;
    try {
      g = generate(seed, p);
    } catch (const GenerationFailure &) {
      ++skipped;
      continue;
    }
    if (g.order() > kOracleCap) {
      ++skipped;
      continue;
    }
    ++ran;
    bool truth = brute_force_color(g).has_value();
    try {
      auto r = solve(g, opt);
      times.push_back(r.stats.seconds);
      if (r.verdict == Verdict::BudgetExceeded) {
        ++budget;
        continue;
      }
      bool got = r.verdict == Verdict::Colored;
      colored += got;
      if (got != truth || r.verdict == Verdict::NotMember) {
        ++mismatches;
        std::cout << "mismatch: seed " << seed << " family " << i % 4
                  << " pipeline " << to_string(r.verdict) << " oracle "
                  << (truth ? "colorable" : "not-colorable") << '\n';
      }
    } catch (const StructuralDiagnostic &e) {
      ++diagnostics;
      ++mismatches;
      std::cout << "diagnostic: seed " << seed << ": " << e.what() << '\n';
    }
  }
  std::cout << "instances " << ran << ", skipped " << skipped << ", colored "
            << colored << ", budget " << budget << ", diagnostics "
            << diagnostics << ", mismatches " << mismatches << '\n';
  if (!times.empty()) {
    std::sort(times.begin(), times.end());
    auto pct = [&](double q) {
      return times[std::min(times.size() - 1,
                            static_cast<std::size_t>(q * times.size()))];
    };
    std::fprintf(stderr, "time p50 %.4fs p90 %.4fs p99 %.4fs max %.4fs\n",
                 pct(0.5), pct(0.9), pct(0.99), times.back());
  }
  return mismatches == 0 && budget == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"3-coloring for P10-free graphs whose odd holes are 7-cycles"};
  app.require_subcommand(1);

  std::string path, col_path;
  auto *check = app.add_subcommand("check", "check class membership");
  check->add_option("graph", path, "DIMACS graph file")->required();

  ColorFlags cf;
  auto *color = app.add_subcommand("color", "find a 3-coloring");
  color->add_option("graph", path, "DIMACS graph file")->required();
  color->add_flag("--assume-member", cf.assume_member,
                  "skip the membership check");
  color->add_option("--budget", cf.budget,
                    "<leaves>[,<seconds>], overrides TRICOLOR_BUDGET");
  color->add_flag("--json", cf.json, "print the coloring as JSON");
  color->add_flag("--stats", cf.stats, "print search statistics to stderr");

  bool vjson = false;
  auto *verify = app.add_subcommand("verify", "check a coloring");
  verify->add_option("graph", path, "DIMACS graph file")->required();
  verify->add_option("coloring", col_path, "coloring file")->required();
  verify->add_flag("--json", vjson, "coloring file is JSON");

  GenFlags gf;
  auto *gen = app.add_subcommand("generate", "write a seeded member");
  gen->add_option("--seed", gf.seed);
  gen->add_option("--size", gf.size, "target order");
  gen->add_option("--density", gf.density, "attachment density");
  gen->add_option("--family", gf.family, "a, b, c or d");
  gen->add_option("--fixture", gf.fixture, "named fixture (family d)");
  gen->add_option("-o,--output", gf.out, "output file");

  FuzzFlags ff;
  auto *fuzz = app.add_subcommand("fuzz", "pipeline against the oracle");
  fuzz->add_option("--seed", ff.seed);
  fuzz->add_option("--count", ff.count);
  fuzz->add_option("--size", ff.size, "target order");
  fuzz->add_option("--density", ff.density, "attachment density");
  fuzz->add_option("--budget", ff.budget, "<leaves>[,<seconds>]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check)
      return cmd_check(path);
    if (*color)
      return cmd_color(path, cf);
    if (*verify)
      return cmd_verify(path, col_path, vjson);
    if (*gen)
      return cmd_generate(gf);
    if (*fuzz)
      return cmd_fuzz(ff);
  } catch (const ParseError &e) {
    std::cerr << "error: " << path << ":" << e.what() << '\n';
    return 2;
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GenerationFailure &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
