#include "tetrasym/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tetrasym {

Graph::Graph(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {
  const std::size_t n = adjacency_.size();
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw std::invalid_argument("repeated neighbour");
    }
    for (Vertex u : adj) {
      if (u >= n) throw std::invalid_argument("neighbour out of range");
      if (u == v) throw std::invalid_argument("loop at vertex");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : adjacency_[v]) {
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v)) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    }
  }
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return Graph(std::move(adj));
}

std::size_t Graph::size() const {
  std::size_t total = 0;
  for (const auto& adj : adjacency_) total += adj.size();
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t d = adjacency_[0].size();
  for (const auto& adj : adjacency_) {
    if (adj.size() != d) return std::nullopt;
  }
  return d;
}

bool Graph::is_connected() const {
  if (adjacency_.empty()) return true;
  auto dist = distances_from(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) {
    return d == std::numeric_limits<std::size_t>::max();
  });
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(size());
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != adjacency_.size()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

Graph Graph::relabelled(const Permutation& perm) const {
  if (perm.degree() != order()) throw std::invalid_argument("relabelling degree mismatch");
  std::vector<std::vector<Vertex>> adj(order());
  for (Vertex v = 0; v < order(); ++v) {
    auto& out = adj[perm(v)];
    for (Vertex u : adjacency_[v]) out.push_back(perm(u));
  }
  Graph g(std::move(adj));
  if (!labels_.empty()) {
    std::vector<std::string> labels(order());
    for (Vertex v = 0; v < order(); ++v) labels[perm(v)] = labels_[v];
    g.labels_ = std::move(labels);
  }
  return g;
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex v) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::vector<Vertex> queue{v};
  dist[v] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex u = queue[i];
    for (Vertex w : g.neighbours(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> sphere(const Graph& g, Vertex v, std::size_t i) {
  if (v >= g.order()) throw std::invalid_argument("vertex out of range");
  auto dist = distances_from(g, v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] == i) out.push_back(u);
  }
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(p(u)) != g.degree(u)) return false;
    for (Vertex v : g.neighbours(u)) {
      if (!g.adjacent(p(u), p(v))) return false;
    }
  }
  return true;
}

bool preserves_adjacency(const Graph& g, const VertexAction& action) {
  return std::all_of(action.generators.begin(), action.generators.end(),
                     [&](const Permutation& p) { return is_automorphism(g, p); });
}

}  // namespace tetrasym
