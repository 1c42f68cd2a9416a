#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "graph.hpp"

namespace tricolor {

// Cycle indices run over 1..7 and are taken modulo 7.
constexpr int wrap7(int t) noexcept { return ((t - 1) % 7 + 7) % 7 + 1; }

// Induced 7-cycle in canonical form: v[0] is the smallest vertex and
// v[1] < v[6].
struct CycleC7 {
  std::array<Vertex, 7> v{};

  static CycleC7 canonical(std::array<Vertex, 7> raw) {
    auto it = std::min_element(raw.begin(), raw.end());
    std::rotate(raw.begin(), it, raw.end());
    if (raw[1] > raw[6])
      std::reverse(raw.begin() + 1, raw.end());
    return CycleC7{raw};
  }

  auto operator<=>(const CycleC7 &) const = default;
};

// A 7-cycle with a chosen start and direction. at(t) is v_t for any integer t.
class OrientedCycle {
public:
  OrientedCycle() = default;
  explicit OrientedCycle(std::array<Vertex, 7> v) : v_(v) {}
  explicit OrientedCycle(const CycleC7 &c) : v_(c.v) {}

  Vertex at(int t) const noexcept { return v_[wrap7(t) - 1]; }
  const std::array<Vertex, 7> &vertices() const noexcept { return v_; }

  // Index in 1..7 of v, or 0 if v is not on the cycle.
  int index_of(Vertex v) const noexcept {
    for (int t = 0; t < 7; ++t)
      if (v_[t] == v)
        return t + 1;
    return 0;
  }
  bool contains(Vertex v) const noexcept { return index_of(v) != 0; }

  // Same cycle relabelled by t -> 2i - t, which fixes v_i and swaps v_{i+k}
  // with v_{i-k}.
  OrientedCycle reflected_about(int i) const {
    std::array<Vertex, 7> w{};
    for (int t = 1; t <= 7; ++t)
      w[t - 1] = at(2 * i - t);
    return OrientedCycle(w);
  }
  // New labelling whose v_1 is the current v_start.
  OrientedCycle rotated(int start) const {
    std::array<Vertex, 7> w{};
    for (int t = 1; t <= 7; ++t)
      w[t - 1] = at(start + t - 1);
    return OrientedCycle(w);
  }

  VertexSet as_set(std::size_t universe) const {
    return VertexSet(universe, v_.begin(), v_.end());
  }

  bool is_induced_in(const Graph &g) const {
    for (int a = 1; a <= 7; ++a) {
      if (!g.contains(at(a)))
        return false;
      for (int b = a + 1; b <= 7; ++b) {
        bool consecutive = (b == a + 1) || (a == 1 && b == 7);
        if (g.adjacent(at(a), at(b)) != consecutive)
          return false;
      }
    }
    return true;
  }

  bool operator==(const OrientedCycle &) const = default;

  std::string to_string() const {
    std::string s;
    for (int t = 0; t < 7; ++t)
      s += (t ? "-" : "") + std::to_string(v_[t]);
    return s;
  }

private:
  std::array<Vertex, 7> v_{};
};

} // namespace tricolor
