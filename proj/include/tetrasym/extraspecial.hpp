#pragma once

// Normal-form arithmetic for the extraspecial 2-group E_t of plus type and
// its two extensions by the dihedral group <a, b> of order 4t:
//
//   G_t^+ = E_t : D   with a^{2t} = 1,
//   G_t^- = E_t . D   with a^{2t} = z,
//
// where b^2 = 1, a^b = a^-1, x_i^a = x_{i+1} and x_i^b = x_{t-1-i}
// (indices mod 2t) and z generates the centre of E_t.
//
// An element is stored as e * a^k * b^beta with e in E_t written as
// x_0^{v_0} ... x_{2t-1}^{v_{2t-1}} z^{zbit}. Products use the right-action
// convention of Permutation: p*q means p first, and x^g = g^-1 x g.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tetrasym {

enum class Sign : std::uint8_t { plus, minus };

std::string to_string(Sign s);
Sign parse_sign(std::string_view s);

inline constexpr int kMaxExtraspecialT = 15;

/// Element of E_t in sorted normal form.
struct EVec {
  std::uint8_t t = 2;
  std::uint32_t v = 0;  // bit i = exponent of x_i
  bool z = false;

  friend bool operator==(const EVec&, const EVec&) = default;
};

EVec evec_identity(int t);
EVec evec_generator(int t, int i);
EVec evec_central(int t);

/// Throws std::invalid_argument if u.t != w.t.
EVec evec_mul(const EVec& u, const EVec& w);
EVec evec_inv(const EVec& u);

/// Image of u under the automorphism induced by x_i -> x_{map(i)}, computed
/// by rewriting u as a word in the generators and multiplying the images.
/// `map` must preserve the pairs {i, i+t}.
EVec evec_map_generators(const EVec& u, const std::function<int(int)>& map);

/// u^(a^k): x_i -> x_{i+k mod 2t}. The action on E_t is the same in both signs.
EVec conj_by_a(const EVec& u, Sign sign, int k = 1);
/// u^b: x_i -> x_{t-1-i mod 2t}.
EVec conj_by_b(const EVec& u);

/// Element e * a^k * b^beta of G_t^sign.
struct GElt {
  EVec e;
  std::uint8_t k = 0;  // 0 <= k < 2t
  bool beta = false;
  Sign sign = Sign::plus;

  int t() const { return e.t; }
  /// Canonical packing; also the total order on elements.
  std::uint64_t packed() const {
    return std::uint64_t{e.v} | (std::uint64_t{e.z} << 32) | (std::uint64_t{k} << 33) |
           (std::uint64_t{beta} << 41) | (std::uint64_t(sign) << 42) |
           (std::uint64_t{e.t} << 43);
  }

  friend bool operator==(const GElt&, const GElt&) = default;
  friend bool operator<(const GElt& p, const GElt& q) { return p.packed() < q.packed(); }
};

struct GEltHash {
  std::size_t operator()(const GElt& g) const noexcept {
    std::uint64_t x = g.packed() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

void check_extraspecial_t(int t);

GElt g_identity(int t, Sign sign);
GElt g_x(int t, Sign sign, int i);
GElt g_z(int t, Sign sign);
GElt g_a(int t, Sign sign);
GElt g_b(int t, Sign sign);
/// a^n for any integer n (a has order 2t in plus type, 4t in minus type).
GElt g_a_power(int t, Sign sign, long n);
GElt g_from_evec(const EVec& e, Sign sign);

/// Throws std::invalid_argument on mismatched t or sign.
GElt g_mul(const GElt& p, const GElt& q);
GElt g_inv(const GElt& p);
GElt g_pow(const GElt& p, long n);
/// p^q = q^-1 p q.
GElt g_conj(const GElt& p, const GElt& q);
std::uint64_t g_order(const GElt& p);

/// Word form, e.g. "x0*x3*z*a^5*b"; the identity is "1".
std::string to_word(const GElt& g);
/// Accepts any '*'-separated product of x<i>, z, a, a^<n>, b and 1.
GElt parse_word(std::string_view word, int t, Sign sign);

/// Group order t * 2^{2t+3}.
std::uint64_t extraspecial_group_order(int t);

/// Every element of G_t^sign exactly once. Throws std::length_error for t > 4.
std::vector<GElt> enumerate_group(int t, Sign sign);

std::map<std::uint64_t, std::uint64_t> element_order_census(int t, Sign sign);

/// The vertex stabiliser H = <x_0, ..., x_{t-1}, b>, of order 2^{t+1}.
struct SubgroupH {
  int t;
  Sign sign;
  std::vector<GElt> elements;  // sorted by the packed order
};

SubgroupH make_subgroup_h(int t, Sign sign);

/// Whether probe lies in H^mid H = { mid^-1 h1 mid h2 : h1, h2 in H }.
bool double_coset_contains(const SubgroupH& h, const GElt& mid, const GElt& probe);

}  // namespace tetrasym
