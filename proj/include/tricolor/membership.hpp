#pragma once

#include <optional>
#include <vector>

#include "graph_search.hpp"

namespace tricolor {

struct MembershipReport {
  bool member = false;
  bool bipartite = false;
  std::optional<std::vector<Vertex>> bad_path;  // induced P10
  std::optional<std::vector<Vertex>> bad_cycle; // induced odd cycle, not C7
};

// Shortest induced odd cycle whose length is not 7, up to max_len.
inline std::optional<std::vector<Vertex>>
find_induced_odd_cycle_neq7(const Graph &g, std::size_t max_len) {
  for (std::size_t len = 3; len <= max_len && len <= g.order(); len += 2) {
    if (len == 7)
      continue;
    if (auto c = find_induced_cycle(g, len))
      return c;
  }
  return std::nullopt;
}

// A P10-free graph has no induced cycle longer than 19, so the cycle search
// stops there unless a P10 was already found.
inline MembershipReport check_membership(const Graph &g) {
  MembershipReport r;
  r.bad_path = find_induced_path(g, 10);
  std::size_t bound = r.bad_path ? g.order() : 19;
  r.bad_cycle = find_induced_odd_cycle_neq7(g, bound);
  r.member = !r.bad_path && !r.bad_cycle;
  r.bipartite = bipartition(g).has_value();
  return r;
}

inline bool is_member(const Graph &g) {
  if (find_induced_odd_cycle_neq7(g, 5))
    return false;
  return !find_induced_path(g, 10) && !find_induced_odd_cycle_neq7(g, 19);
}

} // namespace tricolor
