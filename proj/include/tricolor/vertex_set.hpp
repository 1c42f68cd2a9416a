#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "errors.hpp"

namespace tricolor {

// Dynamic bitset over a fixed universe [0, universe).
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex *;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet *s, std::size_t word) : set_(s), word_(word) {
      if (set_ != nullptr && word_ < set_->words_.size()) {
        bits_ = set_->words_[word_];
        advance();
      }
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * kBits + std::countr_zero(bits_));
    }
    iterator &operator++() {
      bits_ &= bits_ - 1;
      advance();
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator &o) const {
      return word_ == o.word_ && bits_ == o.bits_;
    }

  private:
    void advance() {
      while (bits_ == 0) {
        ++word_;
        if (word_ >= set_->words_.size()) {
          word_ = set_->words_.size();
          bits_ = 0;
          return;
        }
        bits_ = set_->words_[word_];
      }
    }

    const VertexSet *set_ = nullptr;
    std::size_t word_ = 0;
    Word bits_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> vs)
      : VertexSet(universe) {
    for (Vertex v : vs)
      insert(v);
  }
  template <class It>
  VertexSet(std::size_t universe, It first, It last) : VertexSet(universe) {
    for (; first != last; ++first)
      insert(static_cast<Vertex>(*first));
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v)
      s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kBits] >> (v % kBits)) & 1U) != 0;
  }
  void insert(Vertex v) {
    check(v);
    words_[v / kBits] |= Word{1} << (v % kBits);
  }
  void erase(Vertex v) {
    check(v);
    words_[v / kBits] &= ~(Word{1} << (v % kBits));
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(),
                       [](Word w) { return w == 0; });
  }
  bool any() const noexcept { return !empty(); }

  // Smallest member; universe() when empty.
  Vertex first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<Vertex>(i * kBits + std::countr_zero(words_[i]));
    return static_cast<Vertex>(universe_);
  }

  bool intersects(const VertexSet &o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0)
        return true;
    return false;
  }
  bool is_subset_of(const VertexSet &o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0)
        return false;
    return true;
  }

  VertexSet &operator&=(const VertexSet &o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet &operator|=(const VertexSet &o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet &operator-=(const VertexSet &o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

  bool operator==(const VertexSet &o) const = default;

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, words_.size()); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
  void check(Vertex v) const {
    if (v >= universe_)
      throw ContractViolation("vertex " + std::to_string(v) +
                              " outside universe of size " +
                              std::to_string(universe_));
  }
  void same_universe(const VertexSet &o) const {
    if (o.universe_ != universe_)
      throw ContractViolation("vertex sets over different universes");
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

} // namespace tricolor
