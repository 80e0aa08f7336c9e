#include "kernels.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "openpack/error.hpp"
#include "openpack/solvers.hpp"

namespace openpack::detail {

namespace {

int popcount(Mask m) { return std::popcount(m); }
int lowest(Mask m) { return std::countr_zero(m); }

Mask greedy_clique(const MaskGraph& g) {
  Mask best = 0;
  for (int start = 0; start < g.n; ++start) {
    Mask clique = Mask{1} << start;
    Mask candidates = g.adj[start];
    while (candidates != 0) {
      int pick = -1;
      int pick_degree = -1;
      for (Mask c = candidates; c != 0; c &= c - 1) {
        const int v = lowest(c);
        const int d = popcount(g.adj[v] & candidates);
        if (d > pick_degree) {
          pick = v;
          pick_degree = d;
        }
      }
      clique |= Mask{1} << pick;
      candidates &= g.adj[pick];
    }
    if (popcount(clique) > popcount(best)) best = clique;
  }
  return best;
}

// Greedy DSATUR; returns the colour vector.
std::vector<int> dsatur_greedy(const MaskGraph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.n), -1);
  std::vector<Mask> seen(static_cast<std::size_t>(g.n), 0);
  for (int step = 0; step < g.n; ++step) {
    int pick = -1;
    for (int v = 0; v < g.n; ++v) {
      if (colour[v] != -1) continue;
      if (pick == -1 || popcount(seen[v]) > popcount(seen[pick]) ||
          (popcount(seen[v]) == popcount(seen[pick]) && popcount(g.adj[v]) > popcount(g.adj[pick]))) {
        pick = v;
      }
    }
    const int c = lowest(~seen[pick]);
    colour[pick] = c;
    for (Mask m = g.adj[pick]; m != 0; m &= m - 1) seen[lowest(m)] |= Mask{1} << c;
  }
  return colour;
}

class ColoringSearch {
 public:
  ColoringSearch(const MaskGraph& g, int k)
      : g_(g), k_(k), colour_(static_cast<std::size_t>(g.n), -1), seen_(static_cast<std::size_t>(g.n), 0) {}

  bool run() { return search(0, 0); }
  const std::vector<int>& colour() const { return colour_; }

 private:
  bool search(int coloured, int used) {
    if (coloured == g_.n) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < g_.n; ++v) {
      if (colour_[v] != -1) continue;
      const int sat = popcount(seen_[v]);
      if (sat < pick_sat) continue;
      int deg = 0;
      for (Mask m = g_.adj[v]; m != 0; m &= m - 1) deg += colour_[lowest(m)] == -1 ? 1 : 0;
      if (sat > pick_sat || deg > pick_deg) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    if (pick_sat >= k_) return false;
    // A fresh colour is interchangeable with any other unused one.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      const Mask bit = Mask{1} << c;
      if (seen_[pick] & bit) continue;
      colour_[pick] = c;
      Mask touched = 0;
      for (Mask m = g_.adj[pick]; m != 0; m &= m - 1) {
        const int w = lowest(m);
        if (colour_[w] == -1 && !(seen_[w] & bit)) {
          seen_[w] |= bit;
          touched |= Mask{1} << w;
        }
      }
      if (search(coloured + 1, std::max(used, c + 1))) return true;
      for (Mask m = touched; m != 0; m &= m - 1) seen_[lowest(m)] &= ~bit;
      colour_[pick] = -1;
    }
    return false;
  }

  const MaskGraph& g_;
  int k_;
  std::vector<int> colour_;
  std::vector<Mask> seen_;
};

class CliqueSearch {
 public:
  explicit CliqueSearch(const MaskGraph& g) : g_(g), best_(greedy_clique(g)) {}

  Mask run() {
    if (g_.n > 0) expand(0, g_.all());
    return best_;
  }

 private:
  void expand(Mask clique, Mask candidates) {
    // Greedy colouring of the candidates gives an upper bound per vertex.
    std::array<int, 64> order{};
    std::array<int, 64> bound{};
    int count = 0;
    int colour = 0;
    Mask uncoloured = candidates;
    while (uncoloured != 0) {
      ++colour;
      Mask available = uncoloured;
      while (available != 0) {
        const int v = lowest(available);
        available &= ~(g_.adj[v] | (Mask{1} << v));
        uncoloured &= ~(Mask{1} << v);
        order[count] = v;
        bound[count] = colour;
        ++count;
      }
    }
    const int size = popcount(clique);
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[i] <= popcount(best_)) return;
      const int v = order[i];
      const Mask grown = clique | (Mask{1} << v);
      const Mask next = candidates & g_.adj[v];
      if (next == 0) {
        if (popcount(grown) > popcount(best_)) best_ = grown;
      } else {
        expand(grown, next);
      }
      candidates &= ~(Mask{1} << v);
    }
  }

  const MaskGraph& g_;
  Mask best_;
};

class CoverSearch {
 public:
  CoverSearch(const MaskGraph& g, bool open) : g_(g) {
    for (int v = 0; v < g.n; ++v) cover_[v] = open ? g.adj[v] : (g.adj[v] | (Mask{1} << v));
    // The vertices covering u are exactly those whose cover contains u.
    for (int u = 0; u < g.n; ++u) {
      for (int w = 0; w < g.n; ++w) {
        if ((cover_[w] >> u) & 1) by_[u] |= Mask{1} << w;
      }
    }
    best_ = greedy();
  }

  Mask run() {
    search(0, 0);
    return best_;
  }

 private:
  Mask greedy() const {
    Mask chosen = 0;
    Mask covered = 0;
    while (covered != g_.all()) {
      int pick = -1;
      int gain = -1;
      for (int w = 0; w < g_.n; ++w) {
        const int value = popcount(cover_[w] & ~covered);
        if (value > gain) {
          pick = w;
          gain = value;
        }
      }
      chosen |= Mask{1} << pick;
      covered |= cover_[pick];
    }
    return chosen;
  }

  void search(Mask chosen, Mask covered) {
    const Mask open = g_.all() & ~covered;
    if (open == 0) {
      if (popcount(chosen) < popcount(best_)) best_ = chosen;
      return;
    }
    int max_gain = 0;
    for (int w = 0; w < g_.n; ++w) max_gain = std::max(max_gain, popcount(cover_[w] & open));
    const int remaining = popcount(open);
    if (popcount(chosen) + (remaining + max_gain - 1) / max_gain >= popcount(best_)) return;

    int pick = -1;
    for (Mask m = open; m != 0; m &= m - 1) {
      const int u = lowest(m);
      if (pick == -1 || popcount(by_[u]) < popcount(by_[pick])) pick = u;
    }
    for (Mask m = by_[pick]; m != 0; m &= m - 1) {
      const int w = lowest(m);
      search(chosen | (Mask{1} << w), covered | cover_[w]);
    }
  }

  const MaskGraph& g_;
  std::array<Mask, 64> cover_{};
  std::array<Mask, 64> by_{};
  Mask best_ = 0;
};

}  // namespace

MaskGraph to_masks(const Graph& g) {
  const std::size_t cap = solver_cap();
  if (g.order() > cap) {
    fail(ErrorCode::cap_exceeded, "exact solvers accept at most " + std::to_string(cap) + " vertices, got " +
                                      std::to_string(g.order()));
  }
  MaskGraph out;
  out.n = static_cast<int>(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.adj[v] = g.neighbor_words(v)[0];
  return out;
}

MaskGraph complement_masks(const MaskGraph& g) {
  MaskGraph out;
  out.n = g.n;
  for (int v = 0; v < g.n; ++v) out.adj[v] = g.all() & ~g.adj[v] & ~(Mask{1} << v);
  return out;
}

std::vector<int> exact_coloring(const MaskGraph& g) {
  const int lower = std::max(1, popcount(greedy_clique(g)));
  std::vector<int> best = dsatur_greedy(g);
  const int upper = *std::max_element(best.begin(), best.end()) + 1;
  for (int k = lower; k < upper; ++k) {
    ColoringSearch search(g, k);
    if (search.run()) return search.colour();
  }
  return best;
}

Mask exact_max_clique(const MaskGraph& g) { return CliqueSearch(g).run(); }

Mask exact_min_cover(const MaskGraph& g, bool open_neighborhoods) {
  return CoverSearch(g, open_neighborhoods).run();
}

VertexSet to_vertex_set(std::size_t n, Mask m) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(lowest(m)));
  return s;
}

}  // namespace openpack::detail
