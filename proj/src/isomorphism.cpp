#include "tetrasym/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tetrasym {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;
using Colours = std::vector<std::uint32_t>;

Colours refine(const Adjacency& adj, Colours colours) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<Vertex> order(n);
  std::size_t classes = 0;
  {
    Colours sorted = colours;
    std::sort(sorted.begin(), sorted.end());
    classes = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  for (;;) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colours[v]);
      for (Vertex w : adj[v]) s.push_back(colours[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    Colours next(n);
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
      next[order[i]] = id;
    }
    std::size_t next_classes = n == 0 ? 0 : id + 1;
    colours = std::move(next);
    // Signatures start with the old colour, so the count only grows; equal
    // counts mean the partition is stable.
    if (next_classes == classes) return colours;
    classes = next_classes;
  }
}

// Backtracking search for an isomorphism between the two halves of a
// disjoint union, vertex v of the second graph stored as n1 + v.
class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), n_(g1.order()) {
    adj_ = g1.adjacency();
    for (const auto& nb : g2.adjacency()) {
      auto& row = adj_.emplace_back();
      for (Vertex w : nb) row.push_back(static_cast<Vertex>(w + n_));
    }
  }

  std::optional<std::vector<Vertex>> search(Colours colours) const {
    colours = refine(adj_, std::move(colours));
    const std::uint32_t ncol = *std::max_element(colours.begin(), colours.end()) + 1;
    std::vector<std::size_t> count1(ncol, 0), count2(ncol, 0);
    for (std::size_t v = 0; v < n_; ++v) ++count1[colours[v]];
    for (std::size_t v = n_; v < 2 * n_; ++v) ++count2[colours[v]];
    if (count1 != count2) return std::nullopt;

    std::uint32_t cell = ncol;
    for (std::uint32_t c = 0; c < ncol; ++c) {
      if (count1[c] > 1) {
        cell = c;
        break;
      }
    }
    if (cell == ncol) {
      std::vector<Vertex> by_colour(ncol);
      for (std::size_t v = n_; v < 2 * n_; ++v) by_colour[colours[v]] = static_cast<Vertex>(v - n_);
      std::vector<Vertex> phi(n_);
      for (std::size_t v = 0; v < n_; ++v) phi[v] = by_colour[colours[v]];
      if (!is_isomorphism(phi)) return std::nullopt;
      return phi;
    }

    Vertex v = 0;
    while (colours[v] != cell) ++v;
    for (std::size_t w = n_; w < 2 * n_; ++w) {
      if (colours[w] != cell) continue;
      Colours next = colours;
      next[v] = ncol;
      next[w] = ncol;
      if (auto found = search(std::move(next))) return found;
    }
    return std::nullopt;
  }

  bool is_isomorphism(const std::vector<Vertex>& phi) const {
    for (Vertex u = 0; u < n_; ++u) {
      if (g1_.degree(u) != g2_.degree(phi[u])) return false;
      for (Vertex w : g1_.neighbours(u)) {
        if (!g2_.adjacent(phi[u], phi[w])) return false;
      }
    }
    return true;
  }

 private:
  const Graph& g1_;
  const Graph& g2_;
  std::size_t n_;
  Adjacency adj_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("automorphism group order overflows");
  return out;
}

}  // namespace

std::vector<std::uint32_t> refine_colours(const Graph& g, std::vector<std::uint32_t> colours) {
  if (colours.size() != g.order()) throw std::invalid_argument("colouring has the wrong size");
  return refine(g.adjacency(), std::move(colours));
}

std::optional<std::vector<Vertex>> isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() > kIsomorphismMaxVertices || g2.order() > kIsomorphismMaxVertices) {
    throw std::length_error("isomorphism test is limited to " +
                            std::to_string(kIsomorphismMaxVertices) + " vertices");
  }
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  if (g1.order() == 0) return std::vector<Vertex>{};
  Matcher m(g1, g2);
  auto phi = m.search(Colours(2 * g1.order(), 0));
  if (phi && !m.is_isomorphism(*phi)) throw std::logic_error("isomorphism witness failed to verify");
  return phi;
}

std::uint64_t automorphism_group_order(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kAutomorphismMaxVertices) {
    throw std::length_error("automorphism search is limited to " +
                            std::to_string(kAutomorphismMaxVertices) + " vertices");
  }
  if (n <= 1) return 1;

  // Individualise the least vertex of the first non-singleton cell until
  // the colouring is discrete.
  struct Level {
    Colours colours;  // stable colouring before v is individualised
    Vertex v;
  };
  std::vector<Level> levels;
  Colours current = refine(g.adjacency(), Colours(n, 0));
  for (;;) {
    std::uint32_t ncol = *std::max_element(current.begin(), current.end()) + 1;
    std::vector<std::size_t> count(ncol, 0);
    for (auto c : current) ++count[c];
    auto it = std::find_if(count.begin(), count.end(), [](std::size_t k) { return k > 1; });
    if (it == count.end()) break;
    auto cell = static_cast<std::uint32_t>(it - count.begin());
    Vertex v = 0;
    while (current[v] != cell) ++v;
    levels.push_back({current, v});
    current[v] = ncol;
    current = refine(g.adjacency(), std::move(current));
  }

  Matcher matcher(g, g);
  std::vector<std::vector<Vertex>> generators;
  auto orbit_of = [&](Vertex x) {
    std::vector<bool> in(n, false);
    std::vector<Vertex> orbit{x};
    in[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& p : generators) {
        Vertex y = p[orbit[i]];
        if (!in[y]) {
          in[y] = true;
          orbit.push_back(y);
        }
      }
    }
    return std::make_pair(orbit, in);
  };

  std::uint64_t order = 1;
  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    const Colours& base = level->colours;
    const Vertex v = level->v;
    const std::uint32_t fresh = *std::max_element(base.begin(), base.end()) + 1;
    auto [orbit, in_orbit] = orbit_of(v);
    std::vector<bool> rejected(n, false);
    for (Vertex w = 0; w < n; ++w) {
      if (base[w] != base[v] || in_orbit[w] || rejected[w]) continue;
      Colours both(2 * n);
      std::copy(base.begin(), base.end(), both.begin());
      std::copy(base.begin(), base.end(), both.begin() + static_cast<std::ptrdiff_t>(n));
      both[v] = fresh;
      both[n + w] = fresh;
      if (auto phi = matcher.search(std::move(both))) {
        generators.push_back(std::move(*phi));
        std::tie(orbit, in_orbit) = orbit_of(v);
      } else {
        for (Vertex x : orbit_of(w).first) rejected[x] = true;
      }
    }
    order = checked_mul(order, orbit.size());
  }
  return order;
}

}  // namespace tetrasym
