#pragma once

#include <cstddef>
#include <vector>

#include "tetrasym/graph.hpp"
#include "tetrasym/perm_group.hpp"

namespace tetrasym {

/// Length of a shortest cycle. Throws std::invalid_argument on a forest.
std::size_t girth(const Graph& g);
bool is_bipartite(const Graph& g);

struct Partition {
  std::vector<std::vector<Vertex>> blocks;  // sorted, ordered by least element
  std::vector<std::size_t> block_of;
};

struct CoverReport {
  /// Every vertex's neighbourhood maps bijectively onto the neighbourhood of
  /// its image in the quotient.
  bool is_local_bijection = false;
  Graph quotient;
  /// Common block size, or 0 if the blocks differ in size.
  std::size_t fibre_size = 0;
};

struct QuotientResult {
  Partition partition;
  CoverReport cover;
};

/// Quotient by the orbits of N = <normal_gens>. Throws std::invalid_argument
/// when some conjugate of a generator of N by an action generator lies
/// outside N.
QuotientResult quotient_by_subgroup_orbits(const Graph& g, const VertexAction& action,
                                           const std::vector<Permutation>& normal_gens);

/// The group induced on Γ(v) by the stabiliser of v, as permutations of the
/// positions in g.neighbours(v).
PermGroup local_group(const Graph& g, const VertexAction& action, Vertex v);

/// Whether the translates of S under the group generated by the action are
/// pairwise equal or disjoint.
bool is_block(const VertexAction& action, std::size_t n, const std::vector<Vertex>& s);

/// Whether the arc (0, first neighbour) reaches every arc under the action.
bool verify_arc_transitive(const Graph& g, const VertexAction& action);

}  // namespace tetrasym
