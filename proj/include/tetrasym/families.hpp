#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tetrasym/coset_graph.hpp"
#include "tetrasym/coset_groups.hpp"
#include "tetrasym/family_spec.hpp"
#include "tetrasym/graph.hpp"

namespace tetrasym {

/// A constructed family member with the acting group realised on vertices.
struct FamilyGraph {
  FamilySpec spec;
  Graph graph;
  VertexAction action;  // empty when built without a group
  std::uint64_t group_order = 0;
  ExpectedProperties expected;
};

/// x_0..x_{r-1}, a, b acting on the 2r vertices (v, i) -> 2v + i of W_r.
struct WreathGenerators {
  std::vector<Permutation> x;
  Permutation a;
  Permutation b;
};
WreathGenerators wreath_generators(int r);

/// The permutations x_1..x_{2m-1}, h, a, g of Sym(4m) on 0-based points
/// (point p here is point p+1 in 1-based notation). x[i-1] holds x_i.
struct DeltaPermutations {
  std::vector<Permutation> x;
  Permutation h;
  Permutation a;
  Permutation g;
};
DeltaPermutations delta_permutations(int m);

/// W_r = C_r[2K_1] with its C_2^r : D_r action. Requires r >= 3.
FamilyGraph wreath_graph(int r);

/// C(r, s) on the (s-1)-paths (j, e_0..e_{s-1}) of W_r, vertex j * 2^s + e.
/// Requires 2 <= s <= r-2; s = 1 gives W_r.
Graph praeger_xu_direct(int r, int s);

/// C(r, s) as Cos(G_r, <x_0..x_{r-s-1}, b_s>, a) with b_s: v -> r-s-1-v.
/// Requires 1 <= s <= r-1.
FamilyGraph praeger_xu_coset(int r, int s);
std::unique_ptr<CosetGraph<PermCosetGroup>> praeger_xu_coset_graph(int r, int s);

using GammaCosetGraph = CosetGraph<ExtraspecialCosetGroup>;
std::unique_ptr<GammaCosetGraph> gamma_coset_graph(int t, Sign sign);
/// Requires 2 <= t <= 10.
FamilyGraph gamma(int t, Sign sign);

/// Coset representatives of the spheres of radius 2 and 3 around H, as the
/// words listed in the construction (repeats kept, indices mod 2t).
std::vector<GElt> gamma_x2_words(int t, Sign sign);
std::vector<GElt> gamma_x3_words(int t, Sign sign);
/// {1, x_t x_{2t-1}, z, x_t x_{2t-1} z}; their cosets form a block for t >= 4.
std::vector<GElt> gamma_block_words(int t, Sign sign);

using DeltaCosetGraph = CosetGraph<PackedPermCosetGroup>;
/// m >= 3 builds millions of vertices and needs allow_large.
std::unique_ptr<DeltaCosetGraph> delta_coset_graph(int m, bool allow_large = false,
                                                   bool build_action = true);
FamilyGraph delta(int m, bool allow_large = false);

/// Dispatches on the spec. praeger_xu uses the coset form.
FamilyGraph build_family(const FamilySpec& spec, bool allow_large = false);

}  // namespace tetrasym
