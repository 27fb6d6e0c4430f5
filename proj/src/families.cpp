#include "tetrasym/families.hpp"

#include <stdexcept>

namespace tetrasym {

namespace {

Point wreath_vertex(int r, int v, int i) {
  int vv = ((v % r) + r) % r;
  return static_cast<Point>(2 * vv + i);
}

template <class CG>
FamilyGraph copy_out(const FamilySpec& spec, const CG& cg, std::uint64_t group_order) {
  FamilyGraph out;
  out.spec = spec;
  out.graph = cg.graph();
  out.action = cg.action();
  out.group_order = group_order;
  out.expected = expected_properties(spec);
  return out;
}

}  // namespace

WreathGenerators wreath_generators(int r) {
  if (r < 3) throw std::invalid_argument("wreath graph needs r >= 3");
  const std::size_t n = 2 * static_cast<std::size_t>(r);
  WreathGenerators gens;
  for (int i = 0; i < r; ++i) {
    gens.x.push_back(Permutation::from_cycles(n, {{wreath_vertex(r, i, 0), wreath_vertex(r, i, 1)}}));
  }
  std::vector<Point> a(n), b(n);
  for (int v = 0; v < r; ++v) {
    for (int i = 0; i < 2; ++i) {
      a[wreath_vertex(r, v, i)] = wreath_vertex(r, v + 1, i);
      b[wreath_vertex(r, v, i)] = wreath_vertex(r, -v, i);
    }
  }
  gens.a = Permutation(std::move(a));
  gens.b = Permutation(std::move(b));
  return gens;
}

DeltaPermutations delta_permutations(int m) {
  if (m < 2) throw std::invalid_argument("delta needs m >= 2");
  const std::size_t n = 4 * static_cast<std::size_t>(m);
  // Cycles below are written with 1-based points and shifted on the way in.
  auto perm = [n](std::vector<std::vector<Point>> cycles) {
    for (auto& c : cycles) {
      for (auto& p : c) --p;
    }
    return Permutation::from_cycles(n, cycles);
  };
  const Point M = static_cast<Point>(m);
  DeltaPermutations d;
  for (Point i = 1; i <= 2 * M - 1; ++i) d.x.push_back(perm({{2 * i - 1, 2 * i}}));

  std::vector<std::vector<Point>> h{{4 * M - 1, 4 * M}};
  std::vector<std::vector<Point>> a{{4 * M - 2, 4 * M}};
  for (Point i = 1; i <= M - 1; ++i) {
    h.push_back({2 * i - 1, 4 * M - 2 * i - 1});
    h.push_back({2 * i, 4 * M - 2 * i});
    a.push_back({2 * i - 1, 4 * M - 2 * i - 3});
    a.push_back({2 * i, 4 * M - 2 * i - 2});
  }
  d.h = perm(h);
  d.a = perm(a);

  std::vector<Point> odd, even;
  for (Point p = 1; p <= 4 * M - 3; p += 2) odd.push_back(p);
  for (Point p = 2; p <= 4 * M - 4; p += 2) even.push_back(p);
  even.insert(even.end(), {4 * M - 2, 4 * M - 1, 4 * M});
  d.g = perm({odd, even});
  return d;
}

FamilyGraph wreath_graph(int r) {
  auto gens = wreath_generators(r);
  const std::size_t n = 2 * static_cast<std::size_t>(r);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v < r; ++v) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) edges.emplace_back(wreath_vertex(r, v, i), wreath_vertex(r, v + 1, j));
    }
  }
  FamilyGraph out;
  out.spec = wreath_spec(r);
  out.graph = Graph::from_edges(n, edges);
  std::vector<std::string> labels;
  for (int v = 0; v < r; ++v) {
    for (int i = 0; i < 2; ++i) labels.push_back("(" + std::to_string(v) + "," + std::to_string(i) + ")");
  }
  out.graph.set_labels(std::move(labels));
  for (int i = 0; i < r; ++i) {
    out.action.generators.push_back(gens.x[i]);
    out.action.names.push_back("x" + std::to_string(i));
  }
  out.action.generators.push_back(gens.a);
  out.action.names.emplace_back("a");
  out.action.generators.push_back(gens.b);
  out.action.names.emplace_back("b");
  out.group_order = (std::uint64_t{1} << r) * 2 * static_cast<std::uint64_t>(r);
  out.expected = expected_properties(out.spec);
  return out;
}

Graph praeger_xu_direct(int r, int s) {
  if (r < 3) throw std::invalid_argument("C(r,s) needs r >= 3");
  if (s == 1) return wreath_graph(r).graph;
  if (s < 2 || s > r - 2) throw std::invalid_argument("direct C(r,s) needs 2 <= s <= r-2");
  const std::uint32_t width = 1u << s;
  const std::uint32_t mask = width - 1;
  auto vertex = [&](int j, std::uint32_t eps) {
    return static_cast<Vertex>(static_cast<std::uint32_t>(((j % r) + r) % r) * width + eps);
  };
  // (j, e) ~ (j+1, e') iff e_1..e_{s-1} = e'_0..e'_{s-2}; the last choice of e' is free.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int j = 0; j < r; ++j) {
    for (std::uint32_t eps = 0; eps < width; ++eps) {
      for (std::uint32_t c = 0; c < 2; ++c) {
        std::uint32_t next = ((eps >> 1) | (c << (s - 1))) & mask;
        edges.emplace_back(vertex(j, eps), vertex(j + 1, next));
      }
    }
  }
  Graph g = Graph::from_edges(static_cast<std::size_t>(r) * width, edges);
  std::vector<std::string> labels;
  for (int j = 0; j < r; ++j) {
    for (std::uint32_t eps = 0; eps < width; ++eps) {
      std::string label = "(" + std::to_string(j) + ":";
      for (int i = 0; i < s; ++i) label += static_cast<char>('0' + ((eps >> i) & 1));
      labels.push_back(label + ")");
    }
  }
  g.set_labels(std::move(labels));
  return g;
}

std::unique_ptr<CosetGraph<PermCosetGroup>> praeger_xu_coset_graph(int r, int s) {
  if (r < 3 || s < 1 || s > r - 1) throw std::invalid_argument("C(r,s) needs r >= 3, 1 <= s <= r-1");
  auto gens = wreath_generators(r);
  const std::size_t n = 2 * static_cast<std::size_t>(r);
  std::vector<Point> bs(n);
  for (int v = 0; v < r; ++v) {
    for (int i = 0; i < 2; ++i) bs[wreath_vertex(r, v, i)] = wreath_vertex(r, r - s - 1 - v, i);
  }
  Permutation b_s(std::move(bs));

  std::vector<Permutation> group_gens = gens.x;
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) names.push_back("x" + std::to_string(i));
  group_gens.push_back(gens.a);
  names.emplace_back("a");
  group_gens.push_back(b_s);
  names.emplace_back("b_s");

  std::vector<Permutation> h_gens(gens.x.begin(), gens.x.begin() + (r - s));
  h_gens.push_back(b_s);
  std::uint64_t order = PermGroup(n, group_gens).order();
  PermCosetGroup group(n, std::move(group_gens), std::move(names), h_gens, order);
  return std::make_unique<CosetGraph<PermCosetGroup>>(std::move(group), gens.a);
}

FamilyGraph praeger_xu_coset(int r, int s) {
  auto cg = praeger_xu_coset_graph(r, s);
  return copy_out(praeger_xu_spec(r, s), *cg, *cg->group().known_order());
}

std::unique_ptr<GammaCosetGraph> gamma_coset_graph(int t, Sign sign) {
  if (t < 2 || t > 10) throw std::invalid_argument("gamma needs 2 <= t <= 10");
  ExtraspecialCosetGroup group(t, sign);
  return std::make_unique<GammaCosetGraph>(std::move(group), g_a(t, sign));
}

FamilyGraph gamma(int t, Sign sign) {
  auto cg = gamma_coset_graph(t, sign);
  return copy_out(gamma_spec(t, sign == Sign::plus), *cg, extraspecial_group_order(t));
}

namespace {

// x_{i_1} ... x_{i_k} z^zbit a^n with the listed generators present.
GElt gamma_word(int t, Sign sign, const std::vector<int>& xs, bool zbit, long n) {
  GElt g = g_identity(t, sign);
  for (int i : xs) g = g_mul(g, g_x(t, sign, ((i % (2 * t)) + 2 * t) % (2 * t)));
  if (zbit) g = g_mul(g, g_z(t, sign));
  return g_mul(g, g_a_power(t, sign, n));
}

std::vector<int> pick(std::initializer_list<std::pair<int, bool>> items) {
  std::vector<int> out;
  for (auto [i, on] : items) {
    if (on) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<GElt> gamma_x2_words(int t, Sign sign) {
  std::vector<GElt> out;
  for (int e1 = 0; e1 < 2; ++e1) {
    for (int e2 = 0; e2 < 2; ++e2) {
      out.push_back(gamma_word(t, sign, pick({{2 * t - 2, e1}, {2 * t - 1, e2}}), false, 2));
    }
  }
  for (int e1 = 0; e1 < 2; ++e1) {
    for (int e2 = 0; e2 < 2; ++e2) {
      out.push_back(gamma_word(t, sign, pick({{t, e1}, {t + 1, e2}}), false, -2));
    }
  }
  for (int i : {t, 2 * t - 1}) {
    out.push_back(gamma_word(t, sign, {i}, false, 0));
    out.push_back(gamma_word(t, sign, {i}, true, 0));
  }
  return out;
}

std::vector<GElt> gamma_x3_words(int t, Sign sign) {
  std::vector<GElt> out;
  auto bits3 = [&](auto&& f) {
    for (int e = 0; e < 8; ++e) f(e & 1, (e >> 1) & 1, (e >> 2) & 1);
  };
  auto bits2 = [&](auto&& f) {
    for (int e = 0; e < 4; ++e) f(e & 1, (e >> 1) & 1);
  };
  bits3([&](bool e1, bool e2, bool e3) {
    out.push_back(gamma_word(t, sign, pick({{2 * t - 3, e1}, {2 * t - 2, e2}, {2 * t - 1, e3}}), false, 3));
  });
  bits3([&](bool e1, bool e2, bool e3) {
    out.push_back(gamma_word(t, sign, pick({{t, e1}, {t + 1, e2}, {t + 2, e3}}), false, -3));
  });
  bits3([&](bool e1, bool e2, bool e3) {
    out.push_back(gamma_word(t, sign, pick({{t, e1}, {2 * t - 1, e2}}), e3, 1));
  });
  bits2([&](bool e1, bool e2) {
    out.push_back(gamma_word(t, sign, pick({{2 * t - 2, true}, {2 * t - 1, e1}}), e2, 1));
  });
  bits3([&](bool e1, bool e2, bool e3) {
    out.push_back(gamma_word(t, sign, pick({{t, e1}, {t + 1, e2}}), e3, -1));
  });
  bits2([&](bool e1, bool e2) {
    out.push_back(gamma_word(t, sign, pick({{t, e1}, {2 * t - 1, true}}), e2, 1));
  });
  return out;
}

std::vector<GElt> gamma_block_words(int t, Sign sign) {
  return {g_identity(t, sign), gamma_word(t, sign, {t, 2 * t - 1}, false, 0), g_z(t, sign),
          gamma_word(t, sign, {t, 2 * t - 1}, true, 0)};
}

std::unique_ptr<DeltaCosetGraph> delta_coset_graph(int m, bool allow_large, bool build_action) {
  if (m < 2) throw std::invalid_argument("delta needs m >= 2");
  if (m >= 3 && !allow_large) {
    throw std::invalid_argument("delta with m >= 3 needs the large-build flag");
  }
  if (m > 4) throw std::invalid_argument("delta is limited to m <= 4");
  auto d = delta_permutations(m);
  const std::size_t n = 4 * static_cast<std::size_t>(m);
  std::vector<Permutation> gens = d.x;
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * m - 1; ++i) names.push_back("x" + std::to_string(i));
  gens.push_back(d.h);
  names.emplace_back("h");
  gens.push_back(d.a);
  names.emplace_back("a");
  std::vector<Permutation> h_gens = d.x;
  h_gens.push_back(d.h);
  std::uint64_t order = 1;
  for (std::uint64_t i = 2; i <= n; ++i) order *= i;
  PackedPermCosetGroup group(n, gens, std::move(names), h_gens, order);
  CosetGraphOptions options;
  options.build_action = build_action;
  options.store_labels = m == 2;
  options.max_vertices = 1u << 30;
  PackedPerm a = group.pack(d.a);
  return std::make_unique<DeltaCosetGraph>(std::move(group), a, options);
}

FamilyGraph delta(int m, bool allow_large) {
  auto cg = delta_coset_graph(m, allow_large, m == 2);
  return copy_out(delta_spec(m), *cg, *cg->group().known_order());
}

FamilyGraph build_family(const FamilySpec& spec, bool allow_large) {
  spec.validate();
  switch (spec.family) {
    case Family::wreath:
      return wreath_graph(spec.param("r"));
    case Family::praeger_xu:
      return praeger_xu_coset(spec.param("r"), spec.param("s"));
    case Family::gamma_plus:
    case Family::gamma_minus: {
      int t = spec.param("t");
      if (t > 6 && !allow_large) throw std::invalid_argument("gamma with t > 6 needs the large-build flag");
      return gamma(t, spec.family == Family::gamma_plus ? Sign::plus : Sign::minus);
    }
    case Family::delta:
      return delta(spec.param("m"), allow_large);
  }
  throw std::logic_error("unreachable family");
}

}  // namespace tetrasym
