#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "tetrasym/families.hpp"
#include "tetrasym/perm_group.hpp"

using namespace tetrasym;

namespace {

// Brute-force closure, independent of the stabiliser chain.
std::set<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> queue{Permutation::identity(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Permutation p = compose(queue[i], g);
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

// Brute-force primitivity: look for any block of size 2..n/2 containing 0.
bool primitive_by_subsets(std::size_t n, const std::vector<Permutation>& gens) {
  auto elements = closure(n, gens);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1)) continue;
    int size = std::popcount(mask);
    if (size < 2 || static_cast<std::size_t>(size) > n / 2) continue;
    bool block = true;
    for (const auto& g : elements) {
      std::uint32_t image = 0;
      for (Point x = 0; x < n; ++x) {
        if (mask >> x & 1) image |= 1u << g(x);
      }
      if (image != mask && (image & mask) != 0) {
        block = false;
        break;
      }
    }
    if (block && n % static_cast<std::size_t>(size) == 0) return false;
  }
  return true;
}

PermGroup delta_h_group(int m) {
  auto d = delta_permutations(m);
  std::vector<Permutation> gens = d.x;
  gens.push_back(d.h);
  return PermGroup(4 * m, gens);
}

PermGroup delta_k_group(int m) {
  auto d = delta_permutations(m);
  std::vector<Permutation> gens = d.x;
  gens.push_back(d.h);
  gens.push_back(d.a);
  return PermGroup(4 * m, gens);
}

}  // namespace

TEST_CASE("group_order examples") {
  CHECK(PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})}).order() == 2);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK(delta_h_group(2).order() == 16);
  CHECK(delta_k_group(2).order() == 40320);
  CHECK(PermGroup::symmetric(6).order() == 720);
}

TEST_CASE("group order agrees with brute-force closure") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 5;
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < 1 + rng() % 2; ++k) {
      // Sparse generators keep many groups proper.
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point{0});
      std::swap(images[rng() % n], images[rng() % n]);
      if (rng() % 2) std::swap(images[rng() % n], images[rng() % n]);
      gens.emplace_back(images);
    }
    PermGroup g(n, gens);
    CHECK(g.order() == closure(n, gens).size());
  }
}

TEST_CASE("order is independent of the base") {
  std::mt19937 rng(5);
  PermGroup k = delta_k_group(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point> prefix(8);
    std::iota(prefix.begin(), prefix.end(), Point{0});
    std::shuffle(prefix.begin(), prefix.end(), rng);
    prefix.resize(1 + rng() % 4);
    CHECK(k.order_with_base(prefix) == 40320);
  }
  PermGroup h = delta_h_group(2);
  CHECK(h.order_with_base({7, 6, 5}) == 16);
}

TEST_CASE("order equals the product of basic orbit lengths") {
  PermGroup k = delta_k_group(2);
  const auto& chain = k.chain();
  std::uint64_t product = 1;
  for (const auto& level : chain.levels) {
    product *= level.orbit.size();
    // Each basic orbit is the orbit of the base point under its level group.
    std::vector<Permutation> gens;
    for (auto s : level.gens) gens.push_back(chain.strong_generators[s]);
    CHECK(PermGroup(8, gens).orbit(level.base_point).size() == level.orbit.size());
  }
  CHECK(product == k.order());
}

TEST_CASE("contains") {
  PermGroup cyc3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(cyc3.contains(Permutation::identity(3)));
  CHECK_FALSE(cyc3.contains(Permutation::from_cycles(3, {{0, 1}})));
  CHECK_THROWS_AS(cyc3.contains(Permutation::identity(4)), std::invalid_argument);

  auto d = delta_permutations(2);
  PermGroup xs(8, d.x);
  auto elements = closure(8, d.x);
  CHECK(elements.size() == 8);
  CHECK_FALSE(elements.contains(d.h));
  CHECK_FALSE(xs.contains(d.h));
  for (const auto& e : elements) CHECK(xs.contains(e));
}

TEST_CASE("membership is closed under products of members") {
  std::mt19937 rng(9);
  PermGroup h = delta_h_group(3);
  auto elements = closure(12, h.generators());
  CHECK(elements.size() == 64);
  std::vector<Permutation> members(elements.begin(), elements.end());
  for (int trial = 0; trial < 200; ++trial) {
    const auto& x = members[rng() % members.size()];
    const auto& y = members[rng() % members.size()];
    CHECK(h.contains(compose(x, y)));
  }
  for (const auto& g : h.generators()) CHECK(h.contains(g));
  // Random permutations are almost never in a group of order 64 in Sym(12).
  int outside = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Permutation p = random_perm(12, rng);
    bool in = h.contains(p);
    CHECK(in == elements.contains(p));
    outside += !in;
  }
  CHECK(outside > 0);
}

TEST_CASE("orbits") {
  CHECK(PermGroup::trivial(4).orbit(0) == std::vector<Point>{0});
  PermGroup g(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  auto o = g.orbit(0);
  std::sort(o.begin(), o.end());
  CHECK(o == std::vector<Point>{0, 1});
  CHECK(g.orbits().size() == 2);
  CHECK(delta_k_group(2).orbit(0).size() == 8);
  CHECK(delta_k_group(2).is_transitive());
}

TEST_CASE("point stabilisers") {
  PermGroup swap(2, {Permutation::from_cycles(2, {{0, 1}})});
  CHECK(swap.point_stabiliser(0).order() == 1);

  PermGroup regular(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  for (Point x = 0; x < 6; ++x) CHECK(regular.point_stabiliser(x).order() == 1);

  PermGroup k = delta_k_group(2);
  for (Point x : {Point{0}, Point{5}}) {
    PermGroup stab = k.point_stabiliser(x);
    CHECK(stab.order() == 5040);
    CHECK(k.orbit(x).size() * stab.order() == k.order());
    for (const auto& s : stab.generators()) CHECK(s(x) == x);
  }
}

TEST_CASE("primitivity") {
  CHECK(PermGroup::symmetric(3).is_primitive());
  PermGroup cyc4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK_FALSE(cyc4.is_primitive());
  auto block = cyc4.minimal_block(0, 2);
  CHECK(block == std::vector<Point>{0, 2});
  CHECK(delta_k_group(2).is_primitive());
  PermGroup intransitive(4, {Permutation::from_cycles(4, {{0, 1}})});
  CHECK_THROWS_AS(intransitive.is_primitive(), std::invalid_argument);
}

TEST_CASE("is_primitive agrees with a brute-force block search") {
  std::mt19937 rng(13);
  int checked = 0;
  int primitive = 0;
  for (int trial = 0; trial < 300 && checked < 60; ++trial) {
    std::size_t n = 4 + rng() % 5;
    std::vector<Permutation> gens;
    // A cycle of length n keeps the group transitive; the other generator varies.
    std::vector<Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Permutation::from_cycles(n, {cycle}));
    if (rng() % 3) {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point{0});
      std::swap(images[0], images[1 + rng() % (n - 1)]);
      if (rng() % 2) std::swap(images[rng() % n], images[rng() % n]);
      gens.emplace_back(images);
    }
    PermGroup g(n, gens);
    if (!g.is_transitive()) continue;
    ++checked;
    bool expected = primitive_by_subsets(n, gens);
    primitive += expected;
    CHECK(g.is_primitive() == expected);
  }
  CHECK(checked >= 60);
  CHECK(primitive > 0);
  CHECK(primitive < checked);
}

TEST_CASE("element order census") {
  auto trivial = PermGroup::trivial(3).element_order_census();
  CHECK(trivial == std::map<std::uint64_t, std::uint64_t>{{1, 1}});
  auto c2 = PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})}).element_order_census();
  CHECK(c2 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}});
  // Sym(4): 1 identity, 9 involutions, 8 three-cycles, 6 four-cycles.
  auto s4 = PermGroup::symmetric(4).element_order_census();
  CHECK(s4 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
  CHECK_THROWS_AS(PermGroup::symmetric(8).element_order_census(1000), std::length_error);
}

TEST_CASE("elements enumerates each element once") {
  PermGroup k = delta_h_group(2);
  auto elements = k.elements();
  std::set<Permutation> unique(elements.begin(), elements.end());
  CHECK(elements.size() == 16);
  CHECK(unique == closure(8, k.generators()));
}
