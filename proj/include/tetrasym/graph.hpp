#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetrasym/perm_group.hpp"
#include "tetrasym/permutation.hpp"

namespace tetrasym {

using Vertex = std::uint32_t;

/// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency
/// lists and optional vertex labels.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}
  /// Takes adjacency lists as given (sorted on the way in). Throws
  /// std::invalid_argument if they are not simple and symmetric.
  explicit Graph(std::vector<std::vector<Vertex>> adjacency);
  static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const;  // edge count
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v]; }
  const std::vector<std::vector<Vertex>>& adjacency() const { return adjacency_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Common valency, or nullopt if the graph is not regular.
  std::optional<std::size_t> regular_degree() const;
  bool is_connected() const;

  /// Edges {u, v} with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Image graph under the relabelling v -> perm(v).
  Graph relabelled(const Permutation& perm) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

/// Distance-i sphere around v (exact, by BFS).
std::vector<Vertex> sphere(const Graph& g, Vertex v, std::size_t i);
/// BFS distances from v; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances_from(const Graph& g, Vertex v);

/// Group generators realised as permutations of a graph's vertex set.
struct VertexAction {
  std::vector<Permutation> generators;
  std::vector<std::string> names;

  PermGroup group(std::size_t degree) const { return PermGroup(degree, generators); }
};

/// True iff every generator maps edges to edges.
bool preserves_adjacency(const Graph& g, const VertexAction& action);
bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace tetrasym
