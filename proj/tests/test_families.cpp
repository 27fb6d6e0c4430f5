#include <doctest.h>

#include <set>

#include "tetrasym/families.hpp"
#include "tetrasym/graph_algorithms.hpp"
#include "tetrasym/isomorphism.hpp"

using namespace tetrasym;

namespace {

Graph complete_bipartite(std::size_t k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = 0; j < k; ++j) edges.emplace_back(i, static_cast<Vertex>(k + j));
  }
  return Graph::from_edges(2 * k, edges);
}

}  // namespace

TEST_CASE("family specs") {
  CHECK(FamilySpec::parse("gamma:t=4,sign=minus") == gamma_spec(4, false));
  CHECK(FamilySpec::parse("crs:r=6,s=3").to_string() == "crs:r=6,s=3");
  CHECK(FamilySpec::parse("delta:m=2") == delta_spec(2));
  for (const char* bad : {"wreath:r=2", "crs:r=5,s=5", "gamma:t=1,sign=plus", "gamma:t=3", "delta:m=1",
                          "cube:n=3", "wreath:r=x", "wreath:r=5,q=1", "wreath"}) {
    CHECK_THROWS_AS(FamilySpec::parse(bad), std::invalid_argument);
  }
  auto e = expected_properties(gamma_spec(3, false));
  CHECK(e.vertex_count == 96);
  CHECK(e.stabiliser_order == 16);
  CHECK(e.girth == 8);
  CHECK(expected_properties(delta_spec(2)).vertex_count == 2520);
  CHECK(expected_properties(praeger_xu_spec(7, 4)).vertex_count == 7 * 16);
}

TEST_CASE("wreath graphs") {
  auto w4 = wreath_graph(4);
  CHECK(isomorphic(w4.graph, complete_bipartite(4)));
  for (int r = 3; r <= 9; ++r) {
    auto w = wreath_graph(r);
    CHECK(w.graph.order() == static_cast<std::size_t>(2 * r));
    CHECK(w.graph.regular_degree() == 4);
    CHECK(w.graph.is_connected());
    CHECK(w.group_order == (std::uint64_t{1} << r) * 2 * r);
    CHECK(w.action.group(w.graph.order()).order() == w.group_order);
    CHECK(preserves_adjacency(w.graph, w.action));
    CHECK(w.graph.labels()[3] == "(1,1)");
  }
  CHECK(girth(wreath_graph(3).graph) == 3);
  CHECK_THROWS_AS(wreath_graph(2), std::invalid_argument);
}

TEST_CASE("two constructions of C(r, s) agree") {
  for (int r = 4; r <= 8; ++r) {
    for (int s = 2; s <= r - 2; ++s) {
      Graph direct = praeger_xu_direct(r, s);
      auto coset = praeger_xu_coset(r, s);
      CHECK(direct.order() == coset.graph.order());
      CHECK(direct.regular_degree() == 4);
      CHECK(isomorphic(direct, coset.graph).has_value());
    }
  }
  CHECK(isomorphic(praeger_xu_direct(5, 1), wreath_graph(5).graph));
  CHECK_THROWS_AS(praeger_xu_direct(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(praeger_xu_coset(5, 5), std::invalid_argument);
}

TEST_CASE("coset form of C(r, s)") {
  for (int r = 3; r <= 7; ++r) {
    for (int s = 1; s < r; ++s) {
      auto c = praeger_xu_coset(r, s);
      CHECK(c.graph.order() == static_cast<std::size_t>(r) << s);
      CHECK(c.group_order == (std::uint64_t{1} << (r + 1)) * r);
      CHECK(preserves_adjacency(c.graph, c.action));
      CHECK(verify_arc_transitive(c.graph, c.action));
      CHECK(is_bipartite(c.graph) == (r % 2 == 0));
    }
  }
  CHECK(isomorphic(praeger_xu_coset(6, 1).graph, wreath_graph(6).graph));
}

TEST_CASE("Gamma family") {
  for (int t = 2; t <= 5; ++t) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      auto f = gamma(t, sign);
      CHECK(f.graph.order() == static_cast<std::size_t>(t) << (t + 2));
      CHECK(f.group_order == extraspecial_group_order(t));
      CHECK(f.graph.regular_degree() == 4);
      CHECK(is_bipartite(f.graph));
      CHECK(preserves_adjacency(f.graph, f.action));
      auto words = gamma_block_words(t, sign);
      CHECK(words.size() == 4);
    }
  }
  CHECK(girth(gamma(2, Sign::plus).graph) == 4);
  CHECK(girth(gamma(3, Sign::plus).graph) == 6);
  CHECK(girth(gamma(3, Sign::minus).graph) == 8);
  CHECK(girth(gamma(4, Sign::plus).graph) == 8);
  CHECK_THROWS_AS(gamma(1, Sign::plus), std::invalid_argument);
}

TEST_CASE("second and third spheres of Gamma") {
  auto cg = gamma_coset_graph(4, Sign::plus);
  std::set<Vertex> x2;
  for (const auto& w : gamma_x2_words(4, Sign::plus)) x2.insert(*cg->vertex_of(w));
  auto s2 = sphere(cg->graph(), 0, 2);
  CHECK(x2 == std::set<Vertex>(s2.begin(), s2.end()));
  auto x3_words = gamma_x3_words(4, Sign::plus);
  CHECK(x3_words.size() == 40);
  std::set<Vertex> x3;
  for (const auto& w : x3_words) x3.insert(*cg->vertex_of(w));
  CHECK(x3.size() == 36);
  CHECK(sphere(cg->graph(), 0, 3).size() == 36);
}

TEST_CASE("Delta permutations") {
  auto d = delta_permutations(2);
  CHECK(d.x.size() == 3);
  CHECK(d.g == compose(d.a, d.h));
  for (int i = 1; i <= 3; ++i) {
    CHECK(conjugate(d.x[i - 1], d.h) == d.x[4 - i - 1]);
    if (i < 3) CHECK(conjugate(d.x[i - 1], d.g) == d.x[i]);
  }
  CHECK(conjugate(d.x[2], d.g) == Permutation::from_cycles(8, {{0, 6}}));
  std::vector<Permutation> hgens = d.x;
  hgens.push_back(d.h);
  CHECK(PermGroup(8, hgens).order() == 16);
  CHECK(PermGroup(8, {d.x[0], d.h, d.a}).order() == 40320);
  auto d3 = delta_permutations(3);
  std::vector<Permutation> h3 = d3.x;
  h3.push_back(d3.h);
  CHECK(PermGroup(12, h3).order() == 64);
}

TEST_CASE("Delta_2") {
  auto f = delta(2);
  CHECK(f.graph.order() == 2520);
  CHECK(f.graph.size() == 5040);
  CHECK(f.graph.is_connected());
  CHECK_FALSE(is_bipartite(f.graph));
  CHECK(preserves_adjacency(f.graph, f.action));
  CHECK(verify_arc_transitive(f.graph, f.action));
  CHECK_THROWS_AS(delta(3), std::invalid_argument);
}

TEST_CASE("build_family dispatch") {
  CHECK(build_family(FamilySpec::parse("crs:r=5,s=2")).graph.order() == 20);
  CHECK(build_family(FamilySpec::parse("wreath:r=4")).graph.order() == 8);
  CHECK(build_family(FamilySpec::parse("gamma:t=2,sign=plus")).expected.girth == 4);
}
