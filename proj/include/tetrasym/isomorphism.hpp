#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tetrasym/graph.hpp"

namespace tetrasym {

inline constexpr std::size_t kIsomorphismMaxVertices = 5000;
inline constexpr std::size_t kAutomorphismMaxVertices = 100;

/// Colour refinement to the coarsest equitable partition finer than
/// `colours`. Colour ids are assigned canonically from the refined
/// signatures, so equal inputs on isomorphic graphs give matching ids.
std::vector<std::uint32_t> refine_colours(const Graph& g, std::vector<std::uint32_t> colours);

/// A bijection phi with u ~ v iff phi[u] ~ phi[v], or nullopt if none
/// exists. The witness is checked before it is returned. Throws
/// std::length_error above kIsomorphismMaxVertices.
std::optional<std::vector<Vertex>> isomorphic(const Graph& g1, const Graph& g2);

/// |Aut(g)| by orbit-stabiliser along an individualisation sequence.
/// Throws std::length_error above kAutomorphismMaxVertices and
/// std::overflow_error past 2^64.
std::uint64_t automorphism_group_order(const Graph& g);

}  // namespace tetrasym
