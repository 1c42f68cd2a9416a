#pragma once

#include <string>
#include <utility>
#include <vector>

#include "classification.hpp"
#include "palette.hpp"

namespace tricolor {

// Where a slot of a case pattern lives, relative to (C, i).
enum class Region {
  Left,         // A_{i-2} ∪ B_{i-1}
  Right,        // A_{i+2} ∪ B_{i+1}
  LeftFar,      // A_{i-2} ∪ B_{i-3}
  RightNear,    // A_{i+1} ∪ B_{i+2}
  APlus2,       // A_{i+2}
  APlus3,       // A_{i+3}
  AMinus3,      // A_{i-3}
  D,            // V \ N[C]
  DNoLeft,      // D without neighbours in A_{i-2} ∪ B_{i-1}
  XI,           // X_i
  XMinus2,      // X_{i-2}
};

// Colors by role: alpha = c(v_{i-2}), beta = c(v_{i+2}),
// gamma = c(v_{i-1}) = c(v_{i+1}).
enum class Role { Alpha, Beta, Gamma, Free };

struct Slot {
  const char *name;
  Region region;
  Role role;
};

// Induced pattern: the listed edges among slots and no others.
struct CasePattern {
  char kind; // 'A' or 'B'
  int index;
  std::vector<Slot> slots;
  std::vector<std::pair<int, int>> edges;
};

inline std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j + 1 < n; ++j)
    e.emplace_back(j, j + 1);
  return e;
}

inline const std::vector<CasePattern> &type_a_cases() {
  using R = Region;
  using C = Role;
  static const std::vector<CasePattern> cases = [] {
    std::vector<CasePattern> v;
    v.push_back({'A', 1,
                 {{"a1", R::Left, C::Beta},
                  {"w1", R::XI, C::Gamma},
                  {"a2", R::Right, C::Alpha},
                  {"w2", R::XI, C::Gamma},
                  {"a2'", R::Right, C::Alpha},
                  {"w3", R::D, C::Gamma}},
                 path_edges(6)});
    v.push_back({'A', 2,
                 {{"a1", R::LeftFar, C::Beta},
                  {"w1", R::D, C::Gamma},
                  {"a2", R::RightNear, C::Alpha}},
                 path_edges(3)});
    v.push_back({'A', 3,
                 {{"a1'", R::Left, C::Gamma},
                  {"w1", R::D, C::Alpha},
                  {"a1", R::Left, C::Beta},
                  {"w2", R::D, C::Gamma},
                  {"a2", R::APlus3, C::Alpha}},
                 path_edges(5)});
    v.push_back({'A', 4,
                 {{"a1'", R::Left, C::Gamma},
                  {"w1", R::D, C::Alpha},
                  {"a1", R::Left, C::Beta},
                  {"a2", R::AMinus3, C::Gamma}},
                 path_edges(4)});
    // w1 takes alpha: the printed second assignment would clash with a1
    v.push_back({'A', 5,
                 {{"a1", R::Left, C::Gamma},
                  {"w1", R::D, C::Alpha},
                  {"a1'", R::Left, C::Beta},
                  {"w2", R::D, C::Gamma},
                  {"a1''", R::Left, C::Beta},
                  {"w3", R::XMinus2, C::Free}},
                 path_edges(6)});
    v.push_back({'A', 6,
                 {{"a1", R::Left, C::Gamma},
                  {"w1", R::D, C::Alpha},
                  {"a1'", R::Left, C::Beta},
                  {"w2", R::D, C::Gamma},
                  {"a1''", R::Left, C::Beta},
                  {"w3", R::D, C::Gamma},
                  {"w4", R::D, C::Free},
                  {"a2", R::Right, C::Gamma}},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                  {7, 1}}});
    return v;
  }();
  return cases;
}

inline const std::vector<CasePattern> &type_b_cases() {
  using R = Region;
  using C = Role;
  static const std::vector<CasePattern> cases = [] {
    std::vector<CasePattern> v;
    v.push_back({'B', 1,
                 {{"w2", R::D, C::Beta},
                  {"w1", R::D, C::Gamma},
                  {"a1", R::Right, C::Alpha}},
                 path_edges(3)});
    v.push_back({'B', 2,
                 {{"w2", R::DNoLeft, C::Alpha},
                  {"w1", R::D, C::Gamma},
                  {"a1", R::Right, C::Alpha}},
                 path_edges(3)});
    v.push_back({'B', 3,
                 {{"w2", R::D, C::Beta},
                  {"w1", R::APlus3, C::Gamma},
                  {"a1", R::Right, C::Alpha}},
                 path_edges(3)});
    // a2 is read as adjacent to w1
    v.push_back({'B', 4,
                 {{"a1'", R::Left, C::Gamma},
                  {"w1", R::D, C::Alpha},
                  {"a1", R::Left, C::Beta},
                  {"w2", R::D, C::Gamma},
                  {"w3", R::D, C::Free},
                  {"a2", R::APlus2, C::Gamma}},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 1}}});
    return v;
  }();
  return cases;
}

inline VertexSet region_set(const Graph &g, const CycleClassification &k,
                            int i, Region r) {
  switch (r) {
  case Region::Left:
    return k.left_side(i);
  case Region::Right:
    return k.right_side(i);
  case Region::LeftFar:
    return k.a(i - 2) | k.b(i - 3);
  case Region::RightNear:
    return k.a(i + 1) | k.b(i + 2);
  case Region::APlus2:
    return k.a(i + 2);
  case Region::APlus3:
    return k.a(i + 3);
  case Region::AMinus3:
    return k.a(i - 3);
  case Region::D:
    return k.d;
  case Region::DNoLeft: {
    VertexSet out = k.d;
    VertexSet left = k.left_side(i);
    for (Vertex v : k.d)
      if (g.neighbors(v).intersects(left))
        out.erase(v);
    return out;
  }
  case Region::XI:
    return k.x(i);
  case Region::XMinus2:
    return k.x(i - 2);
  }
  return g.empty_set();
}

struct RoleColors {
  Color alpha = 0, beta = 0, gamma = 0;
  Color of(Role r) const {
    switch (r) {
    case Role::Alpha:
      return alpha;
    case Role::Beta:
      return beta;
    case Role::Gamma:
      return gamma;
    case Role::Free:
      return 0;
    }
    return 0;
  }
};

} // namespace tricolor
