#include "tetrasym/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace tetrasym {

std::vector<Point> StabiliserChain::base() const {
  std::vector<Point> out;
  out.reserve(levels.size());
  for (const auto& level : levels) out.push_back(level.base_point);
  return out;
}

std::uint64_t StabiliserChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels) {
    std::uint64_t len = level.orbit.size();
    if (result > UINT64_MAX / len) throw std::overflow_error("group order exceeds 64 bits");
    result *= len;
  }
  return result;
}

Permutation StabiliserChain::transversal_element(std::size_t level, Point p) const {
  const Level& lv = levels[level];
  if (lv.label[p] == -1) throw std::invalid_argument("point not in basic orbit");
  std::vector<std::size_t> path;
  while (lv.label[p] != -2) {
    std::size_t s = static_cast<std::size_t>(lv.label[p]);
    path.push_back(s);
    p = strong_inverses[s](p);
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Permutation& s = strong_generators[*it];
    for (auto& x : images) x = s(x);
  }
  return Permutation::unchecked(std::move(images));
}

std::pair<Permutation, std::size_t> StabiliserChain::sift(Permutation g,
                                                         std::size_t from_level) const {
  std::vector<Point> images(g.images().begin(), g.images().end());
  for (std::size_t l = from_level; l < levels.size(); ++l) {
    const Level& lv = levels[l];
    Point beta = images[lv.base_point];
    if (lv.label[beta] == -1) {
      return {Permutation::unchecked(std::move(images)), l};
    }
    // Multiply on the right by u_beta^-1 one tree edge at a time.
    while (lv.label[beta] != -2) {
      const Permutation& inv = strong_inverses[static_cast<std::size_t>(lv.label[beta])];
      for (auto& x : images) x = inv(x);
      beta = images[lv.base_point];
    }
  }
  return {Permutation::unchecked(std::move(images)), levels.size()};
}

namespace {

struct Builder {
  StabiliserChain& chain;
  // tested[level][k][p]: Schreier generator for (orbit point p, k-th level generator) done.
  std::vector<std::vector<std::vector<char>>> tested;

  void add_level(Point base_point) {
    StabiliserChain::Level lv;
    lv.base_point = base_point;
    lv.label.assign(chain.degree, -1);
    lv.label[base_point] = -2;
    lv.orbit.push_back(base_point);
    chain.levels.push_back(std::move(lv));
    tested.emplace_back();
  }

  void extend_orbit(std::size_t l) {
    auto& lv = chain.levels[l];
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      Point p = lv.orbit[i];
      for (std::size_t s : lv.gens) {
        Point q = chain.strong_generators[s](p);
        if (lv.label[q] == -1) {
          lv.label[q] = static_cast<std::int32_t>(s);
          lv.orbit.push_back(q);
        }
      }
    }
  }

  void add_generator_to_level(std::size_t l, std::size_t s) {
    chain.levels[l].gens.push_back(s);
    tested[l].emplace_back(chain.degree, 0);
  }

  // Adds a strong generator that fixes the base points of levels < up_to_level.
  void add_strong_generator(Permutation g, std::size_t up_to_level) {
    std::size_t s = chain.strong_generators.size();
    chain.strong_inverses.push_back(g.inverse());
    chain.strong_generators.push_back(std::move(g));
    for (std::size_t l = 0; l <= up_to_level && l < chain.levels.size(); ++l) {
      add_generator_to_level(l, s);
      extend_orbit(l);
    }
  }

  static Point first_moved(const Permutation& g) {
    for (Point x = 0; x < g.degree(); ++x) {
      if (g(x) != x) return x;
    }
    throw std::logic_error("identity has no moved point");
  }
};

}  // namespace

StabiliserChain schreier_sims(std::size_t degree, const std::vector<Permutation>& generators,
                              const std::vector<Point>& base_prefix,
                              std::optional<std::uint64_t> known_order) {
  StabiliserChain chain;
  chain.degree = degree;
  Builder b{chain, {}};

  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  for (Point p : base_prefix) {
    if (p >= degree) throw std::invalid_argument("base point out of range");
    b.add_level(p);
  }
  // Every generator must move some base point.
  for (const auto& g : gens) {
    bool moves = false;
    for (const auto& lv : chain.levels) moves = moves || g(lv.base_point) != lv.base_point;
    if (!moves) b.add_level(Builder::first_moved(g));
  }
  for (auto& g : gens) {
    std::size_t s = chain.strong_generators.size();
    chain.strong_inverses.push_back(g.inverse());
    chain.strong_generators.push_back(g);
    // Original generators belong to every level whose earlier base points they fix.
    for (std::size_t l = 0; l < chain.levels.size(); ++l) {
      b.add_generator_to_level(l, s);
      if (g(chain.levels[l].base_point) != chain.levels[l].base_point) break;
    }
  }
  for (std::size_t l = 0; l < chain.levels.size(); ++l) b.extend_orbit(l);

  auto reached_known = [&] {
    if (!known_order) return false;
    return chain.order() == *known_order;
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels.size()) - 1;
  while (i >= 0) {
    if (reached_known()) break;
    auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t oi = 0; oi < chain.levels[li].orbit.size() && !restarted; ++oi) {
      Point beta = chain.levels[li].orbit[oi];
      for (std::size_t k = 0; k < chain.levels[li].gens.size(); ++k) {
        auto& flag = b.tested[li][k][beta];
        if (flag) continue;
        flag = 1;
        std::size_t s = chain.levels[li].gens[k];
        const Permutation& gen = chain.strong_generators[s];
        Permutation u = chain.transversal_element(li, beta);
        Permutation candidate = compose(u, gen);
        auto [residue, stop] = chain.sift(std::move(candidate), li);
        if (stop == chain.levels.size() && residue.is_identity()) continue;
        if (stop == chain.levels.size()) b.add_level(Builder::first_moved(residue));
        b.add_strong_generator(std::move(residue), stop);
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return chain;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  }
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
    std::vector<Point> cycle(degree);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    if (degree >= 3) gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return PermGroup(degree, std::move(gens));
}

const StabiliserChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = schreier_sims(degree_, generators_, {}, order_hint_);
  });
  return cache_->chain;
}

std::uint64_t PermGroup::order_with_base(const std::vector<Point>& prefix) const {
  return schreier_sims(degree_, generators_, prefix).order();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
  const auto& c = chain();
  auto [residue, stop] = c.sift(p);
  return stop == c.levels.size() && residue.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw std::invalid_argument("point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<Point> out{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(degree_, 0);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (Point y : o) seen[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || orbit(0).size() == degree_;
}

PermGroup PermGroup::point_stabiliser(Point x) const {
  if (x >= degree_) throw std::invalid_argument("point out of range");
  StabiliserChain c = schreier_sims(degree_, generators_, {x});
  std::vector<Permutation> gens;
  // Strong generators fixing the first base point generate its stabiliser.
  for (const auto& s : c.strong_generators) {
    if (s(x) == x) gens.push_back(s);
  }
  return PermGroup(degree_, std::move(gens));
}

std::vector<Point> PermGroup::minimal_block(Point a, Point b) const {
  std::vector<Point> parent(degree_);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::deque<std::pair<Point, Point>> queue;
  auto unite = [&](Point x, Point y) {
    Point rx = find(x), ry = find(y);
    if (rx == ry) return;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    queue.emplace_back(x, y);
  };
  unite(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) unite(g(x), g(y));
  }
  std::vector<Point> block;
  Point root = find(a);
  for (Point x = 0; x < degree_; ++x) {
    if (find(x) == root) block.push_back(x);
  }
  return block;
}

bool PermGroup::is_primitive() const {
  if (!is_transitive()) throw std::invalid_argument("is_primitive requires a transitive group");
  for (Point x = 1; x < degree_; ++x) {
    if (minimal_block(0, x).size() < degree_) return false;
  }
  return true;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  const auto& c = chain();
  if (c.order() > cap) throw std::length_error("group too large to enumerate");
  // Transversals per level, explicit.
  std::vector<std::vector<Permutation>> transversals(c.levels.size());
  for (std::size_t l = 0; l < c.levels.size(); ++l) {
    for (Point p : c.levels[l].orbit) transversals[l].push_back(c.transversal_element(l, p));
  }
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // g = u_{k-1} * ... * u_0, built from the deepest level outward.
  for (std::size_t l = c.levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * transversals[l].size());
    for (const auto& g : out) {
      for (const auto& u : transversals[l]) next.push_back(compose(g, u));
    }
    out = std::move(next);
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> PermGroup::element_order_census(std::uint64_t cap) const {
  std::map<std::uint64_t, std::uint64_t> census;
  for (const auto& g : elements(cap)) ++census[g.order()];
  return census;
}

}  // namespace tetrasym
