#include "tetrasym/coset_groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tetrasym {

ExtraspecialCosetGroup::ExtraspecialCosetGroup(int t, Sign sign)
    : t_(t), sign_(sign), h_(make_subgroup_h(t, sign)) {
  for (int i = 0; i < 2 * t; ++i) {
    generators_.push_back(g_x(t, sign, i));
    names_.push_back("x" + std::to_string(i));
  }
  generators_.push_back(g_a(t, sign));
  names_.emplace_back("a");
  generators_.push_back(g_b(t, sign));
  names_.emplace_back("b");
}

std::vector<Permutation> enumerate_subgroup(std::size_t degree,
                                            const std::vector<Permutation>& generators,
                                            std::size_t cap) {
  std::vector<Permutation> out{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      Permutation p = compose(out[i], g);
      if (seen.insert(p).second) {
        if (out.size() >= cap) throw std::length_error("subgroup exceeds enumeration cap");
        out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermCosetGroup::PermCosetGroup(std::size_t degree, std::vector<Permutation> generators,
                               std::vector<std::string> names,
                               const std::vector<Permutation>& h_generators,
                               std::optional<std::uint64_t> known_order)
    : degree_(degree),
      generators_(std::move(generators)),
      names_(std::move(names)),
      h_(enumerate_subgroup(degree, h_generators)),
      known_order_(known_order) {
  if (names_.size() != generators_.size()) {
    throw std::invalid_argument("generator name count mismatch");
  }
}

PackedPermCosetGroup::PackedPermCosetGroup(std::size_t degree,
                                           const std::vector<Permutation>& generators,
                                           std::vector<std::string> names,
                                           const std::vector<Permutation>& h_generators,
                                           std::optional<std::uint64_t> known_order)
    : degree_(degree), names_(std::move(names)), known_order_(known_order) {
  if (degree < 1 || degree > 16) throw std::invalid_argument("packed permutations need 1..16 points");
  if (names_.size() != generators.size()) {
    throw std::invalid_argument("generator name count mismatch");
  }
  identity_ = pack(Permutation::identity(degree));
  for (const auto& g : generators) generators_.push_back(pack(g));
  for (const auto& h : enumerate_subgroup(degree, h_generators)) h_.push_back(pack(h));
  std::sort(h_.begin(), h_.end(), [](auto x, auto y) { return x.bits < y.bits; });
}

PackedPerm PackedPermCosetGroup::pack(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
  std::uint64_t bits = 0;
  for (Point i = 0; i < degree_; ++i) bits = (bits << 4) | p(i);
  return PackedPerm{bits};
}

Permutation PackedPermCosetGroup::unpack(const PackedPerm& p) const {
  std::vector<Point> images(degree_);
  const unsigned top = 4 * static_cast<unsigned>(degree_ - 1);
  for (unsigned i = 0; i < degree_; ++i) {
    images[i] = static_cast<Point>((p.bits >> (top - 4 * i)) & 0xF);
  }
  return Permutation(std::move(images));
}

}  // namespace tetrasym
