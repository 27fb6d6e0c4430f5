#pragma once

// Coset graphs Cos(G, H, a): vertices are the right cosets Hg, edges are
// {Hg, Hag}. The neighbours of Hr are the cosets H a h r for h in H, and G
// acts on the right, Hg -> Hgs.
//
// A coset is identified by its canonical representative, the minimum of
// {h g : h in H} under the group's total order. BFS from H expands vertices
// in index order and numbers new neighbours in representative order, so the
// numbering is reproducible.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "tetrasym/graph.hpp"

namespace tetrasym {

/// Group-element interface consumed by the coset-graph builder.
template <class G>
concept CosetGroup = requires(const G& g, const typename G::Element& x) {
  typename G::Element;
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.multiply(x, x) } -> std::convertible_to<typename G::Element>;
  { g.inverse(x) } -> std::convertible_to<typename G::Element>;
  { g.hash(x) } -> std::convertible_to<std::size_t>;
  { g.less(x, x) } -> std::convertible_to<bool>;
  { x == x } -> std::convertible_to<bool>;
  { g.subgroup() } -> std::convertible_to<const std::vector<typename G::Element>&>;
  { g.generators() } -> std::convertible_to<const std::vector<typename G::Element>&>;
  { g.generator_names() } -> std::convertible_to<const std::vector<std::string>&>;
  { g.name(x) } -> std::convertible_to<std::string>;
  { g.known_order() } -> std::convertible_to<std::optional<std::uint64_t>>;
};

class CosetGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hypotheses of the coset-graph construction: connectivity (<H, a> = G),
/// symmetry (a^-1 in HaH) and the valency |HaH| / |H|.
struct SabidussiReport {
  bool connected = false;
  bool symmetric = false;
  std::size_t valency = 0;

  bool tetravalent() const { return valency == 4; }
  bool ok() const { return connected && symmetric && tetravalent(); }
};

struct CosetGraphOptions {
  /// 0 accepts any valency; otherwise a mismatch throws CosetGraphError.
  std::size_t required_valency = 4;
  /// Realise the designated generators as vertex permutations.
  bool build_action = true;
  bool store_labels = true;
  /// Abort once the vertex count passes this bound.
  std::size_t max_vertices = 10'000'000;
};

namespace detail {

/// Open-addressing table of vertex ids keyed by their representatives.
template <CosetGroup G>
class RepresentativeIndex {
 public:
  using Element = typename G::Element;

  RepresentativeIndex(const G& group, const std::vector<Element>& reps)
      : group_(group), reps_(reps), slots_(1024, 0) {}

  std::optional<Vertex> find(const Element& x) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = group_.hash(x) & mask;; i = (i + 1) & mask) {
      std::uint32_t s = slots_[i];
      if (s == 0) return std::nullopt;
      if (reps_[s - 1] == x) return s - 1;
    }
  }

  /// Registers reps[v]; the caller has already appended it.
  void insert(Vertex v) {
    if (2 * (count_ + 1) > slots_.size()) grow();
    place(v);
    ++count_;
  }

 private:
  void place(Vertex v) {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = group_.hash(reps_[v]) & mask;
    while (slots_[i] != 0) i = (i + 1) & mask;
    slots_[i] = v + 1;
  }

  void grow() {
    std::vector<std::uint32_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, 0);
    for (std::uint32_t s : old) {
      if (s != 0) place(s - 1);
    }
  }

  const G& group_;
  const std::vector<Element>& reps_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

}  // namespace detail

template <CosetGroup G>
class CosetGraph {
 public:
  using Element = typename G::Element;

  CosetGraph(G group, Element a, CosetGraphOptions options = {})
      : group_(std::move(group)), a_(std::move(a)), index_(group_, reps_) {
    build(options);
  }

  // The index refers to members; keep instances where they are built.
  CosetGraph(const CosetGraph&) = delete;
  CosetGraph& operator=(const CosetGraph&) = delete;

  const G& group() const { return group_; }
  const Element& a() const { return a_; }
  const Graph& graph() const { return graph_; }
  const VertexAction& action() const { return action_; }
  std::size_t valency() const { return neighbour_transversal_.size(); }
  /// Closed under every designated generator, i.e. <H, a> = G.
  bool closed_under_generators() const { return closed_; }
  const Element& representative(Vertex v) const { return reps_[v]; }
  /// Representatives t_i with HaH the disjoint union of the cosets H t_i.
  const std::vector<Element>& neighbour_transversal() const { return neighbour_transversal_; }

  Element canonical(const Element& g) const {
    const auto& h = group_.subgroup();
    Element best = group_.multiply(h.front(), g);
    for (std::size_t i = 1; i < h.size(); ++i) {
      Element c = group_.multiply(h[i], g);
      if (group_.less(c, best)) best = std::move(c);
    }
    return best;
  }

  /// The vertex Hg, if it lies in the constructed component.
  std::optional<Vertex> vertex_of(const Element& g) const { return index_.find(canonical(g)); }

  /// Right multiplication by g on the vertex set. Throws CosetGraphError if
  /// g does not preserve the component.
  Permutation vertex_permutation(const Element& g) const {
    std::vector<Point> images(reps_.size());
    for (Vertex v = 0; v < reps_.size(); ++v) {
      auto w = vertex_of(group_.multiply(reps_[v], g));
      if (!w) throw CosetGraphError("element moves a coset outside the graph");
      images[v] = *w;
    }
    return Permutation(std::move(images));
  }

  /// Whether g fixes every coset (early exit on the first moved vertex).
  bool acts_trivially(const Element& g) const {
    for (Vertex v = 0; v < reps_.size(); ++v) {
      auto w = vertex_of(group_.multiply(reps_[v], g));
      if (!w || *w != v) return false;
    }
    return true;
  }

 private:
  void build(const CosetGraphOptions& options) {
    check_subgroup_closed();
    const auto& h = group_.subgroup();

    for (const auto& x : h) {
      Element c = canonical(group_.multiply(a_, x));
      bool seen = std::any_of(neighbour_transversal_.begin(), neighbour_transversal_.end(),
                              [&](const Element& y) { return y == c; });
      if (!seen) neighbour_transversal_.push_back(std::move(c));
    }
    std::sort(neighbour_transversal_.begin(), neighbour_transversal_.end(),
              [&](const Element& x, const Element& y) { return group_.less(x, y); });
    const std::size_t k = neighbour_transversal_.size();
    if (options.required_valency != 0 && k != options.required_valency) {
      throw CosetGraphError("coset graph has valency " + std::to_string(k) + ", expected " +
                            std::to_string(options.required_valency));
    }

    reps_.push_back(canonical(group_.identity()));
    index_.insert(0);
    std::vector<std::vector<Vertex>> adjacency;
    std::vector<Element> nbrs;
    for (Vertex v = 0; v < reps_.size(); ++v) {
      nbrs.clear();
      for (const auto& t : neighbour_transversal_) {
        nbrs.push_back(canonical(group_.multiply(t, reps_[v])));
      }
      std::sort(nbrs.begin(), nbrs.end(),
                [&](const Element& x, const Element& y) { return group_.less(x, y); });
      std::vector<Vertex> adj;
      adj.reserve(k);
      for (auto& c : nbrs) {
        auto found = index_.find(c);
        Vertex w;
        if (found) {
          w = *found;
        } else {
          w = static_cast<Vertex>(reps_.size());
          if (reps_.size() >= options.max_vertices) {
            throw CosetGraphError("coset graph exceeds the vertex limit");
          }
          reps_.push_back(std::move(c));
          index_.insert(w);
        }
        adj.push_back(w);
      }
      std::sort(adj.begin(), adj.end());
      if (std::adjacent_find(adj.begin(), adj.end()) != adj.end() ||
          std::find(adj.begin(), adj.end(), v) != adj.end()) {
        throw CosetGraphError("coset graph neighbourhood is not simple");
      }
      adjacency.push_back(std::move(adj));
    }
    if (auto known = group_.known_order()) {
      if (reps_.size() * group_.subgroup().size() != *known) closed_ = false;
    }
    try {
      graph_ = Graph(std::move(adjacency));
    } catch (const std::invalid_argument& e) {
      throw CosetGraphError(std::string("coset graph is not undirected: ") + e.what());
    }
    if (options.store_labels) {
      std::vector<std::string> labels;
      labels.reserve(reps_.size());
      for (const auto& r : reps_) labels.push_back(group_.name(r));
      graph_.set_labels(std::move(labels));
    }
    closed_ = closed_ && check_closure(options.build_action);
  }

  void check_subgroup_closed() const {
    const auto& h = group_.subgroup();
    if (h.empty()) throw CosetGraphError("subgroup enumeration is empty");
    struct Hash {
      const G* g;
      std::size_t operator()(const Element& x) const { return g->hash(x); }
    };
    std::unordered_set<Element, Hash> members(h.begin(), h.end(), h.size() * 2, Hash{&group_});
    if (members.size() != h.size()) throw CosetGraphError("subgroup enumeration has repeats");
    for (const auto& x : h) {
      for (const auto& y : h) {
        if (!members.contains(group_.multiply(x, y))) {
          throw CosetGraphError("subgroup enumeration is not closed under multiplication");
        }
      }
    }
  }

  bool check_closure(bool keep_action) {
    bool closed = true;
    const auto& gens = group_.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<Point> images(reps_.size());
      bool ok = true;
      for (Vertex v = 0; v < reps_.size() && ok; ++v) {
        auto w = vertex_of(group_.multiply(reps_[v], gens[i]));
        if (!w) {
          ok = false;
        } else {
          images[v] = *w;
        }
      }
      if (!ok) {
        closed = false;
        continue;
      }
      if (keep_action) {
        action_.generators.push_back(Permutation(std::move(images)));
        action_.names.push_back(group_.generator_names()[i]);
      }
    }
    return closed;
  }

  G group_;
  Element a_;
  std::vector<Element> reps_;
  detail::RepresentativeIndex<G> index_;
  std::vector<Element> neighbour_transversal_;
  Graph graph_;
  VertexAction action_;
  bool closed_ = true;
};

/// Checks the coset-graph hypotheses without requiring valency 4.
template <CosetGroup G>
SabidussiReport validate_sabidussi(const G& group, const typename G::Element& a) {
  SabidussiReport report;
  const auto& h = group.subgroup();
  const auto a_inv = group.inverse(a);
  // a^-1 = h1 a h2 for some h1, h2  <=>  (h1 a)^-1 a^-1 lies in H.
  struct Hash {
    const G* g;
    std::size_t operator()(const typename G::Element& x) const { return g->hash(x); }
  };
  std::unordered_set<typename G::Element, Hash> members(h.begin(), h.end(), h.size() * 2,
                                                        Hash{&group});
  for (const auto& h1 : h) {
    if (members.contains(group.multiply(group.inverse(group.multiply(h1, a)), a_inv))) {
      report.symmetric = true;
      break;
    }
  }
  auto canonical = [&](const typename G::Element& g) {
    auto best = group.multiply(h.front(), g);
    for (const auto& y : h) {
      auto c = group.multiply(y, g);
      if (group.less(c, best)) best = std::move(c);
    }
    return best;
  };
  std::vector<typename G::Element> cosets;
  for (const auto& x : h) {
    auto c = canonical(group.multiply(a, x));
    if (std::none_of(cosets.begin(), cosets.end(), [&](const auto& r) { return r == c; })) {
      cosets.push_back(std::move(c));
    }
  }
  report.valency = cosets.size();

  CosetGraphOptions options;
  options.required_valency = 0;
  options.build_action = false;
  options.store_labels = false;
  try {
    CosetGraph<G> cg(group, a, options);
    report.connected = cg.closed_under_generators();
  } catch (const CosetGraphError&) {
    // Directed or degenerate neighbourhoods; connectivity is not assessed.
    report.connected = false;
  }
  return report;
}

/// True iff no non-identity element of H fixes every coset.
template <CosetGroup G>
bool validate_corefree(const CosetGraph<G>& cg) {
  const auto& group = cg.group();
  const auto id = group.identity();
  for (const auto& x : group.subgroup()) {
    if (x == id) continue;
    if (cg.acts_trivially(x)) return false;
  }
  return true;
}

}  // namespace tetrasym
