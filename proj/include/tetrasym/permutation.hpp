#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tetrasym {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1} stored as its image sequence.
///
/// Permutations act on the right: x^p is written p(x) in code, and the
/// product p*q means "apply p, then q", so (p*q)(x) = q(p(x)). Conjugation
/// follows the same convention: x^h = h^-1 * x * h.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Skips the bijection check; callers guarantee `images` is a bijection.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }
  /// Builds a permutation from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Order of the permutation as an element of Sym(n).
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation on 0-based points, e.g. "(0,1)(2,3)"; identity is "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& p, const Permutation& q) {
    return p.images_ <=> q.images_;
  }

 private:
  std::vector<Point> images_;
};

/// compose(p, q)(x) = q(p(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
/// p^h = h^-1 p h.
Permutation conjugate(const Permutation& p, const Permutation& h);

/// Parses cycle notation ("(0,1)(2,3)", "()") or a JSON image array
/// ("[1,0,3,2]"). `degree` of 0 means infer it (max point + 1 for cycles).
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace tetrasym
