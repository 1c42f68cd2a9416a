// Reads a DIMACS graph and prints a 3-coloring, or the reason there is none.
//   sample_color data/c7.dimacs
#include <tricolor/io.hpp>
#include <tricolor/pipeline.hpp>

#include <iostream>

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <graph.dimacs>\n";
    return 2;
  }
  tricolor::Graph g;
  try {
    g = tricolor::read_dimacs_file(argv[1]);
  } catch (const tricolor::InputError &e) {
    std::cerr << argv[1] << ": " << e.what() << '\n';
    return 2;
  }
  tricolor::SolveResult r = tricolor::solve(g);
  std::cout << "c " << g.order() << " vertices, " << g.edges().size()
            << " edges: " << tricolor::to_string(r.verdict) << '\n';
  if (r.coloring)
    tricolor::write_coloring(std::cout, g, *r.coloring);
  return r.verdict == tricolor::Verdict::Colored ? 0 : 1;
}
