#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "graph.hpp"

namespace tricolor {

using Color = std::uint8_t; // 1, 2 or 3; 0 means uncolored
inline constexpr std::array<Color, 3> kColors{1, 2, 3};

// Subset of {1,2,3}.
class ColorSet {
public:
  constexpr ColorSet() = default;
  constexpr ColorSet(std::initializer_list<Color> cs) {
    for (Color c : cs)
      insert(c);
  }
  static constexpr ColorSet all() { return from_bits(0b111); }
  static constexpr ColorSet single(Color c) { return ColorSet{c}; }
  static constexpr ColorSet from_bits(std::uint8_t b) {
    ColorSet s;
    s.bits_ = b & 0b111;
    return s;
  }

  constexpr bool contains(Color c) const noexcept {
    return c >= 1 && c <= 3 && ((bits_ >> (c - 1)) & 1U) != 0;
  }
  constexpr void insert(Color c) noexcept {
    if (c >= 1 && c <= 3)
      bits_ |= static_cast<std::uint8_t>(1U << (c - 1));
  }
  constexpr void erase(Color c) noexcept {
    if (c >= 1 && c <= 3)
      bits_ &= static_cast<std::uint8_t>(~(1U << (c - 1)));
  }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  // Smallest color, 0 when empty.
  constexpr Color min() const noexcept {
    return bits_ == 0 ? 0 : static_cast<Color>(std::countr_zero(bits_) + 1);
  }
  constexpr Color max() const noexcept {
    return bits_ == 0 ? 0 : static_cast<Color>(8 - std::countl_zero(bits_));
  }
  constexpr bool is_subset_of(ColorSet o) const noexcept {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr ColorSet operator&(ColorSet o) const noexcept {
    return from_bits(bits_ & o.bits_);
  }
  constexpr ColorSet operator|(ColorSet o) const noexcept {
    return from_bits(bits_ | o.bits_);
  }
  constexpr ColorSet operator-(ColorSet o) const noexcept {
    return from_bits(bits_ & ~o.bits_);
  }
  constexpr bool operator==(const ColorSet &) const = default;

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (Color c : kColors)
      if (contains(c))
        out.push_back(c);
    return out;
  }
  std::string to_string() const {
    std::string s = "{";
    for (Color c : to_vector())
      s += (s.size() > 1 ? "," : "") + std::to_string(c);
    return s + "}";
  }

private:
  std::uint8_t bits_ = 0;
};

// Third color, given two distinct ones.
constexpr Color third_color(Color a, Color b) noexcept {
  return static_cast<Color>(6 - a - b);
}

// One list per vertex id of the universe; entries for ids outside the
// current vertex set are ignored.
class Palette {
public:
  Palette() = default;
  explicit Palette(std::size_t universe, ColorSet fill = ColorSet::all())
      : lists_(universe, fill) {}

  std::size_t universe() const noexcept { return lists_.size(); }
  ColorSet operator[](Vertex v) const { return lists_.at(v); }
  ColorSet &operator[](Vertex v) { return lists_.at(v); }
  void set(Vertex v, ColorSet s) { lists_.at(v) = s; }
  void fix(Vertex v, Color c) { lists_.at(v) = ColorSet::single(c); }

  bool feasible_on(const VertexSet &vs) const {
    for (Vertex v : vs)
      if (lists_[v].empty())
        return false;
    return true;
  }
  int max_list_on(const VertexSet &vs) const {
    int m = 0;
    for (Vertex v : vs)
      m = std::max(m, lists_[v].size());
    return m;
  }
  bool operator==(const Palette &) const = default;

private:
  std::vector<ColorSet> lists_;
};

using MonoSets = std::vector<VertexSet>;

// Color per vertex id, 0 for uncolored.
class Coloring {
public:
  Coloring() = default;
  explicit Coloring(std::size_t universe) : c_(universe, 0) {}

  std::size_t universe() const noexcept { return c_.size(); }
  Color operator[](Vertex v) const { return c_.at(v); }
  Color &operator[](Vertex v) { return c_.at(v); }
  bool colored(Vertex v) const { return v < c_.size() && c_[v] != 0; }
  VertexSet domain() const {
    VertexSet d(c_.size());
    for (std::size_t v = 0; v < c_.size(); ++v)
      if (c_[v] != 0)
        d.insert(static_cast<Vertex>(v));
    return d;
  }
  bool operator==(const Coloring &) const = default;

private:
  std::vector<Color> c_;
};

// Singleton propagation restricted to the vertices in `alive`, to a fixpoint.
// Returns false when some list became empty.
inline bool update_palette(const Graph &g, const VertexSet &alive,
                           Palette &p) {
  std::deque<Vertex> queue;
  std::vector<char> done(g.universe(), 0);
  for (Vertex v : alive) {
    if (p[v].empty())
      return false;
    if (p[v].size() == 1)
      queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (done[u])
      continue;
    done[u] = 1;
    ColorSet cu = p[u];
    for (Vertex w : g.neighbors(u)) {
      if (!alive.contains(w))
        continue;
      ColorSet before = p[w];
      ColorSet after = before - cu;
      if (after == before)
        continue;
      p[w] = after;
      if (after.empty())
        return false;
      if (after.size() == 1)
        queue.push_back(w);
    }
  }
  return true;
}

inline Palette update_palette(const Graph &g, Palette p) {
  update_palette(g, g.vertices(), p);
  return p;
}

inline bool verify_coloring(const Graph &g, const Coloring &c,
                            const Palette *p = nullptr,
                            const MonoSets *z = nullptr) {
  if (c.universe() != g.universe() || !(c.domain() == g.vertices()))
    throw InputError("coloring domain does not match the graph's vertices");
  for (const auto &[u, v] : g.edges())
    if (c[u] == c[v])
      return false;
  for (Vertex v : g.vertices())
    if (c[v] < 1 || c[v] > 3 || (p != nullptr && !(*p)[v].contains(c[v])))
      return false;
  if (z != nullptr)
    for (const auto &s : *z) {
      Color seen = 0;
      for (Vertex v : s) {
        if (!g.contains(v))
          continue;
        if (seen == 0)
          seen = c[v];
        else if (seen != c[v])
          return false;
      }
    }
  return true;
}

} // namespace tricolor
