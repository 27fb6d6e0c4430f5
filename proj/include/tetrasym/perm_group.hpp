#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tetrasym/permutation.hpp"

namespace tetrasym {

/// Base and strong generating set for a permutation group.
///
/// Level i holds the basic orbit of base[i] under the strong generators that
/// fix base[0..i-1], stored as a Schreier tree: `label[p]` indexes the strong
/// generator carrying the tree parent of p to p (-1 = not in the orbit,
/// -2 = the root).
struct StabiliserChain {
  struct Level {
    Point base_point = 0;
    std::vector<std::size_t> gens;  // indices into strong_generators
    std::vector<Point> orbit;
    std::vector<std::int32_t> label;
  };

  std::size_t degree = 0;
  std::vector<Permutation> strong_generators;
  std::vector<Permutation> strong_inverses;
  std::vector<Level> levels;

  std::vector<Point> base() const;
  /// Product of basic orbit lengths. Throws std::overflow_error past 2^64.
  std::uint64_t order() const;
  /// Coset representative u with base_point^u = p at the given level.
  Permutation transversal_element(std::size_t level, Point p) const;
  /// Strips g through the chain starting at `from_level`. Returns the residue
  /// and the level at which stripping stopped (levels.size() if it ran through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from_level = 0) const;
};

/// Deterministic Schreier-Sims. `base_prefix` fixes the first base points;
/// the rest are chosen as the smallest point moved by a new strong generator.
/// When `known_order` is given, construction stops as soon as the partial
/// chain reaches that order (the partial order never exceeds |G|).
StabiliserChain schreier_sims(std::size_t degree, const std::vector<Permutation>& generators,
                              const std::vector<Point>& base_prefix = {},
                              std::optional<std::uint64_t> known_order = std::nullopt);

/// A permutation group given by generators, with a lazily built stabiliser
/// chain. Copies share the cache; the chain is built at most once and is
/// safe to read from several threads afterwards.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  /// Full symmetric group on `degree` points.
  static PermGroup symmetric(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabiliserChain& chain() const;
  /// Supplies a known group order so the chain build can stop early.
  void set_order_hint(std::uint64_t order) { order_hint_ = order; }

  std::uint64_t order() const { return chain().order(); }
  /// Order recomputed from a fresh chain whose base starts with `prefix`.
  std::uint64_t order_with_base(const std::vector<Point>& prefix) const;
  bool contains(const Permutation& p) const;

  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Generators of the stabiliser of x.
  PermGroup point_stabiliser(Point x) const;

  /// The block containing a in the finest invariant partition with a ~ b.
  std::vector<Point> minimal_block(Point a, Point b) const;
  /// Throws std::invalid_argument when the group is intransitive.
  bool is_primitive() const;

  /// All elements, deepest transversal varying fastest. Throws
  /// std::length_error when the order exceeds `cap`.
  std::vector<Permutation> elements(std::uint64_t cap = 1'000'000) const;
  /// Map element order -> number of elements of that order.
  std::map<std::uint64_t, std::uint64_t> element_order_census(
      std::uint64_t cap = 1'000'000) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::optional<std::uint64_t> order_hint_;

  struct Cache {
    std::once_flag once;
    StabiliserChain chain;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace tetrasym
