#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace tricolor {

// 2-SAT over variables 0..n-1. Literal 2x is "x", 2x+1 is "not x".
class TwoSat {
public:
  explicit TwoSat(std::size_t n) : n_(n), adj_(2 * n) {}

  static int pos(int x) { return 2 * x; }
  static int neg(int x) { return 2 * x + 1; }
  static int negate(int lit) { return lit ^ 1; }

  std::size_t variables() const noexcept { return n_; }

  void add_clause(int a, int b) {
    adj_[negate(a)].push_back(b);
    adj_[negate(b)].push_back(a);
  }
  void add_unit(int a) { add_clause(a, a); }

  // Tarjan SCC; components come out in reverse topological order, so x is
  // true when its component was closed before that of not-x.
  std::optional<std::vector<bool>> solve() const {
    const int m = static_cast<int>(2 * n_);
    std::vector<int> index(m, -1), low(m, 0), comp(m, -1);
    std::vector<char> on_stack(m, 0);
    std::vector<int> stack;
    int counter = 0, comps = 0;

    struct Frame {
      int v;
      std::size_t edge;
    };
    std::vector<Frame> call;
    for (int s = 0; s < m; ++s) {
      if (index[s] != -1)
        continue;
      call.push_back({s, 0});
      index[s] = low[s] = counter++;
      stack.push_back(s);
      on_stack[s] = 1;
      while (!call.empty()) {
        Frame &f = call.back();
        if (f.edge < adj_[f.v].size()) {
          int w = adj_[f.v][f.edge++];
          if (index[w] == -1) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = 1;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
          continue;
        }
        int v = f.v;
        if (low[v] == index[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
          } while (w != v);
          ++comps;
        }
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
    std::vector<bool> value(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      int a = comp[pos(static_cast<int>(x))];
      int b = comp[neg(static_cast<int>(x))];
      if (a == b)
        return std::nullopt;
      value[x] = a < b;
    }
    return value;
  }

private:
  std::size_t n_;
  std::vector<std::vector<int>> adj_;
};

} // namespace tricolor
