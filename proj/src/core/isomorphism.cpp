#include "openpack/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "openpack/error.hpp"

namespace openpack {

namespace {

// Stable colour refinement run on both graphs at once so that colour ids are
// comparable across them. Returns colours for g's vertices followed by h's.
std::vector<int> refine(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  auto neighbors = [&](std::size_t x) { return x < n ? g.neighbors(static_cast<Vertex>(x)) : h.neighbors(static_cast<Vertex>(x - n)); };

  std::vector<int> colour(2 * n);
  for (std::size_t x = 0; x < 2 * n; ++x) colour[x] = static_cast<int>(neighbors(x).size());
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> keys(2 * n);
    for (std::size_t x = 0; x < 2 * n; ++x) {
      std::vector<int> around;
      const std::size_t base = x < n ? 0 : n;
      neighbors(x).for_each([&](Vertex w) { around.push_back(colour[base + w]); });
      std::sort(around.begin(), around.end());
      keys[x] = {colour[x], std::move(around)};
      ids.emplace(keys[x], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t x = 0; x < 2 * n; ++x) colour[x] = ids[keys[x]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, std::vector<int> colour)
      : g_(g), h_(h), n_(g.order()), colour_(std::move(colour)), image_(n_, 0), used_(n_, false) {
    std::vector<std::size_t> class_size(2 * n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) ++class_size[static_cast<std::size_t>(colour_[v])];
    // Rare colours first, then prefer vertices adjacent to already-ordered ones.
    std::vector<bool> placed(n_, false);
    for (std::size_t step = 0; step < n_; ++step) {
      Vertex best = 0;
      bool have = false;
      std::size_t best_links = 0;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (Vertex u : order_) links += g_.adjacent(u, v) ? 1 : 0;
        const auto size_v = class_size[static_cast<std::size_t>(colour_[v])];
        const auto size_b = have ? class_size[static_cast<std::size_t>(colour_[best])] : 0;
        if (!have || size_v < size_b || (size_v == size_b && links > best_links)) {
          best = v;
          best_links = links;
          have = true;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool search(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < n_; ++w) {
      if (used_[w] || colour_[n_ + w] != colour_[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Vertex u = order_[k];
        consistent = g_.adjacent(u, v) == h_.adjacent(image_[u], w);
      }
      if (!consistent) continue;
      image_[v] = w;
      used_[w] = true;
      if (search(depth + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const std::vector<Vertex>& image() const { return image_; }

 private:
  const Graph& g_;
  const Graph& h_;
  std::size_t n_;
  std::vector<int> colour_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    fail(ErrorCode::cap_exceeded,
         "isomorphism test is limited to " + std::to_string(kMaxIsomorphismOrder) + " vertices");
  }
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const std::size_t n = g.order();
  auto colour = refine(g, h);
  std::vector<int> left(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<int> right(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (left != right) return std::nullopt;

  Matcher matcher(g, h, std::move(colour));
  if (!matcher.search(0)) return std::nullopt;
  return matcher.image();
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace openpack
