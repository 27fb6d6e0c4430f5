#pragma once

// Adapters that present concrete groups through the CosetGroup interface.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetrasym/coset_graph.hpp"
#include "tetrasym/extraspecial.hpp"
#include "tetrasym/permutation.hpp"

namespace tetrasym {

/// G_t^sign with H = <x_0, ..., x_{t-1}, b>; generators x_0..x_{2t-1}, a, b.
class ExtraspecialCosetGroup {
 public:
  using Element = GElt;

  ExtraspecialCosetGroup(int t, Sign sign);

  int t() const { return t_; }
  Sign sign() const { return sign_; }

  GElt identity() const { return g_identity(t_, sign_); }
  GElt multiply(const GElt& x, const GElt& y) const { return g_mul(x, y); }
  GElt inverse(const GElt& x) const { return g_inv(x); }
  std::size_t hash(const GElt& x) const { return GEltHash{}(x); }
  bool less(const GElt& x, const GElt& y) const { return x.packed() < y.packed(); }
  const std::vector<GElt>& subgroup() const { return h_.elements; }
  const SubgroupH& subgroup_h() const { return h_; }
  const std::vector<GElt>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::string name(const GElt& x) const { return to_word(x); }
  std::optional<std::uint64_t> known_order() const { return extraspecial_group_order(t_); }

 private:
  int t_;
  Sign sign_;
  SubgroupH h_;
  std::vector<GElt> generators_;
  std::vector<std::string> names_;
};

/// Closure of `generators` under multiplication. Throws std::length_error
/// when more than `cap` elements appear.
std::vector<Permutation> enumerate_subgroup(std::size_t degree,
                                            const std::vector<Permutation>& generators,
                                            std::size_t cap = 1u << 16);

/// A permutation group acting on points, with H enumerated from generators.
class PermCosetGroup {
 public:
  using Element = Permutation;

  PermCosetGroup(std::size_t degree, std::vector<Permutation> generators,
                 std::vector<std::string> names, const std::vector<Permutation>& h_generators,
                 std::optional<std::uint64_t> known_order = std::nullopt);

  std::size_t degree() const { return degree_; }
  Permutation identity() const { return Permutation::identity(degree_); }
  Permutation multiply(const Permutation& x, const Permutation& y) const { return compose(x, y); }
  Permutation inverse(const Permutation& x) const { return x.inverse(); }
  std::size_t hash(const Permutation& x) const { return PermutationHash{}(x); }
  bool less(const Permutation& x, const Permutation& y) const { return x < y; }
  const std::vector<Permutation>& subgroup() const { return h_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::string name(const Permutation& x) const { return x.to_cycle_string(); }
  std::optional<std::uint64_t> known_order() const { return known_order_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<std::string> names_;
  std::vector<Permutation> h_;
  std::optional<std::uint64_t> known_order_;
};

/// Permutation of at most 16 points packed four bits per point, point 0 in
/// the most significant nibble, so integer order is lexicographic order on
/// image arrays.
struct PackedPerm {
  std::uint64_t bits = 0;
  friend bool operator==(const PackedPerm&, const PackedPerm&) = default;
};

/// Same group as PermCosetGroup, with 8-byte elements for large coset spaces.
class PackedPermCosetGroup {
 public:
  using Element = PackedPerm;

  PackedPermCosetGroup(std::size_t degree, const std::vector<Permutation>& generators,
                       std::vector<std::string> names,
                       const std::vector<Permutation>& h_generators,
                       std::optional<std::uint64_t> known_order = std::nullopt);

  PackedPerm pack(const Permutation& p) const;
  Permutation unpack(const PackedPerm& p) const;

  std::size_t degree() const { return degree_; }
  PackedPerm identity() const { return identity_; }
  PackedPerm multiply(const PackedPerm& x, const PackedPerm& y) const {
    // (x*y)(i) = y(x(i)).
    std::uint64_t out = 0;
    const unsigned top = 4 * static_cast<unsigned>(degree_ - 1);
    for (unsigned i = 0; i < degree_; ++i) {
      unsigned xi = static_cast<unsigned>(x.bits >> (top - 4 * i)) & 0xF;
      std::uint64_t yi = (y.bits >> (top - 4 * xi)) & 0xF;
      out |= yi << (top - 4 * i);
    }
    return PackedPerm{out};
  }
  PackedPerm inverse(const PackedPerm& x) const {
    std::uint64_t out = 0;
    const unsigned top = 4 * static_cast<unsigned>(degree_ - 1);
    for (unsigned i = 0; i < degree_; ++i) {
      unsigned xi = static_cast<unsigned>(x.bits >> (top - 4 * i)) & 0xF;
      out |= std::uint64_t{i} << (top - 4 * xi);
    }
    return PackedPerm{out};
  }
  std::size_t hash(const PackedPerm& x) const {
    std::uint64_t h = x.bits * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
  bool less(const PackedPerm& x, const PackedPerm& y) const { return x.bits < y.bits; }
  const std::vector<PackedPerm>& subgroup() const { return h_; }
  const std::vector<PackedPerm>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::string name(const PackedPerm& x) const { return unpack(x).to_cycle_string(); }
  std::optional<std::uint64_t> known_order() const { return known_order_; }

 private:
  std::size_t degree_;
  PackedPerm identity_;
  std::vector<PackedPerm> generators_;
  std::vector<std::string> names_;
  std::vector<PackedPerm> h_;
  std::optional<std::uint64_t> known_order_;
};

static_assert(CosetGroup<ExtraspecialCosetGroup>);
static_assert(CosetGroup<PermCosetGroup>);
static_assert(CosetGroup<PackedPermCosetGroup>);

}  // namespace tetrasym
