#include "tetrasym/graph_algorithms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tetrasym {

std::size_t girth(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t best = kNone;
  std::vector<std::size_t> dist(n, kNone);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  std::vector<Vertex> touched;
  for (Vertex root = 0; root < n; ++root) {
    queue.assign(1, root);
    dist[root] = 0;
    parent[root] = root;
    touched.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // Any cycle found from here on has length at least 2 * dist[u].
      if (best != kNone && 2 * dist[u] >= best) break;
      for (Vertex w : g.neighbours(u)) {
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
          touched.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    for (Vertex v : touched) dist[v] = kNone;
  }
  if (best == kNone) throw std::invalid_argument("girth of a forest is undefined");
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbours(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

Partition orbit_partition(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& p : gens) {
    for (Point x = 0; x < n; ++x) {
      std::size_t a = find(x), b = find(p(x));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  }
  Partition part;
  part.block_of.assign(n, 0);
  std::vector<std::size_t> index(n, std::numeric_limits<std::size_t>::max());
  for (Vertex v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (index[r] == std::numeric_limits<std::size_t>::max()) {
      index[r] = part.blocks.size();
      part.blocks.emplace_back();
    }
    part.block_of[v] = index[r];
    part.blocks[index[r]].push_back(v);
  }
  return part;
}

}  // namespace

QuotientResult quotient_by_subgroup_orbits(const Graph& g, const VertexAction& action,
                                           const std::vector<Permutation>& normal_gens) {
  const std::size_t n = g.order();
  for (const auto& p : normal_gens) {
    if (p.degree() != n) throw std::invalid_argument("subgroup generator has the wrong degree");
  }
  PermGroup normal(n, normal_gens);
  for (const auto& y : normal_gens) {
    for (const auto& s : action.generators) {
      if (!normal.contains(conjugate(y, s))) {
        throw std::invalid_argument("subgroup is not normal in the action group");
      }
    }
  }

  QuotientResult out;
  out.partition = orbit_partition(n, normal_gens);
  const auto& block_of = out.partition.block_of;
  const std::size_t q = out.partition.blocks.size();

  std::vector<std::pair<Vertex, Vertex>> edges;
  bool loops = false;
  for (auto [u, w] : g.edges()) {
    auto bu = static_cast<Vertex>(block_of[u]), bw = static_cast<Vertex>(block_of[w]);
    if (bu == bw) {
      loops = true;
      continue;
    }
    edges.emplace_back(std::min(bu, bw), std::max(bu, bw));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.cover.quotient = Graph::from_edges(q, edges);

  bool bijective = !loops;
  for (Vertex v = 0; v < n && bijective; ++v) {
    std::vector<std::size_t> images;
    for (Vertex w : g.neighbours(v)) images.push_back(block_of[w]);
    std::sort(images.begin(), images.end());
    bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
    bijective = injective && images.size() == out.cover.quotient.degree(block_of[v]);
  }
  out.cover.is_local_bijection = bijective;

  std::size_t size = out.partition.blocks.front().size();
  bool equal = std::all_of(out.partition.blocks.begin(), out.partition.blocks.end(),
                           [&](const auto& b) { return b.size() == size; });
  out.cover.fibre_size = equal ? size : 0;
  return out;
}

PermGroup local_group(const Graph& g, const VertexAction& action, Vertex v) {
  PermGroup group = action.group(g.order());
  PermGroup stab = group.point_stabiliser(v);
  const auto& nbrs = g.neighbours(v);
  std::vector<Permutation> restricted;
  for (const auto& s : stab.generators()) {
    std::vector<Point> images;
    for (Vertex w : nbrs) {
      auto it = std::lower_bound(nbrs.begin(), nbrs.end(), s(w));
      if (it == nbrs.end() || *it != s(w)) {
        throw std::invalid_argument("stabiliser does not preserve the neighbourhood");
      }
      images.push_back(static_cast<Point>(it - nbrs.begin()));
    }
    Permutation p(std::move(images));
    if (!p.is_identity()) restricted.push_back(std::move(p));
  }
  return PermGroup(nbrs.size(), std::move(restricted));
}

bool is_block(const VertexAction& action, std::size_t n, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(n, kNone);
  std::vector<std::vector<Vertex>> translates{s};
  for (Vertex v : s) {
    if (v >= n) throw std::out_of_range("block vertex out of range");
    owner[v] = 0;
  }
  for (std::size_t i = 0; i < translates.size(); ++i) {
    for (const auto& p : action.generators) {
      std::vector<Vertex> image;
      for (Vertex v : translates[i]) image.push_back(p(v));
      std::size_t id = owner[image.front()];
      if (id != kNone) {
        // Equal sizes, so membership of every point means equality.
        if (!std::all_of(image.begin(), image.end(), [&](Vertex v) { return owner[v] == id; })) {
          return false;
        }
      } else {
        if (!std::all_of(image.begin(), image.end(), [&](Vertex v) { return owner[v] == kNone; })) {
          return false;
        }
        for (Vertex v : image) owner[v] = translates.size();
        translates.push_back(std::move(image));
      }
    }
  }
  return true;
}

bool verify_arc_transitive(const Graph& g, const VertexAction& action) {
  const std::size_t n = g.order();
  if (n == 0 || g.size() == 0) return false;
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  const std::size_t arcs = offset[n];
  auto arc_id = [&](Vertex u, Vertex w) -> std::size_t {
    const auto& nb = g.neighbours(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), w);
    if (it == nb.end() || *it != w) return arcs;
    return offset[u] + static_cast<std::size_t>(it - nb.begin());
  };
  Vertex start = 0;
  while (g.degree(start) == 0) ++start;
  std::vector<bool> seen(arcs, false);
  std::vector<std::pair<Vertex, Vertex>> queue{{start, g.neighbours(start).front()}};
  seen[offset[start]] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [u, w] = queue[head];
    for (const auto& p : action.generators) {
      std::size_t id = arc_id(p(u), p(w));
      if (id == arcs) return false;  // not an automorphism
      if (!seen[id]) {
        seen[id] = true;
        queue.emplace_back(p(u), p(w));
      }
    }
  }
  return queue.size() == arcs;
}

}  // namespace tetrasym
