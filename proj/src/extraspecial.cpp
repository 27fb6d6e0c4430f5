#include "tetrasym/extraspecial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace tetrasym {

std::string to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

Sign parse_sign(std::string_view s) {
  if (s == "plus" || s == "+") return Sign::plus;
  if (s == "minus" || s == "-") return Sign::minus;
  throw std::invalid_argument("sign must be plus or minus");
}

void check_extraspecial_t(int t) {
  if (t < 2 || t > kMaxExtraspecialT) {
    throw std::invalid_argument("extraspecial parameter t out of range");
  }
}

EVec evec_identity(int t) {
  check_extraspecial_t(t);
  return EVec{static_cast<std::uint8_t>(t), 0, false};
}

EVec evec_generator(int t, int i) {
  check_extraspecial_t(t);
  if (i < 0 || i >= 2 * t) throw std::invalid_argument("generator index out of range");
  return EVec{static_cast<std::uint8_t>(t), std::uint32_t{1} << i, false};
}

EVec evec_central(int t) {
  check_extraspecial_t(t);
  return EVec{static_cast<std::uint8_t>(t), 0, true};
}

EVec evec_mul(const EVec& u, const EVec& w) {
  if (u.t != w.t) throw std::invalid_argument("EVec parameter mismatch");
  // Sorting u*w moves each x_j of w left past the x_i of u with i > j; only
  // the pairs i = j + t fail to commute, each contributing one z.
  const std::uint32_t low = (std::uint32_t{1} << u.t) - 1;
  const bool carry = std::popcount((u.v >> u.t) & w.v & low) & 1;
  return EVec{u.t, u.v ^ w.v, static_cast<bool>(u.z ^ w.z ^ carry)};
}

EVec evec_inv(const EVec& u) {
  // u*u = z^c with c the carry of u against itself, so u^-1 = u * z^c.
  EVec sq = evec_mul(u, u);
  return EVec{u.t, u.v, static_cast<bool>(u.z ^ sq.z)};
}

EVec evec_map_generators(const EVec& u, const std::function<int(int)>& map) {
  EVec r{u.t, 0, u.z};
  for (std::uint32_t bits = u.v; bits != 0; bits &= bits - 1) {
    int i = std::countr_zero(bits);
    r = evec_mul(r, evec_generator(u.t, map(i)));
  }
  return r;
}

namespace {

int mod(long x, long m) { return static_cast<int>(((x % m) + m) % m); }

}  // namespace

EVec conj_by_a(const EVec& u, Sign /*sign*/, int k) {
  const int n = 2 * u.t;
  const int shift = mod(k, n);
  if (shift == 0) return u;
  return evec_map_generators(u, [n, shift](int i) { return (i + shift) % n; });
}

EVec conj_by_b(const EVec& u) {
  const int t = u.t;
  return evec_map_generators(u, [t](int i) { return mod(t - 1 - i, 2 * t); });
}

GElt g_identity(int t, Sign sign) { return GElt{evec_identity(t), 0, false, sign}; }
GElt g_x(int t, Sign sign, int i) { return GElt{evec_generator(t, i), 0, false, sign}; }
GElt g_z(int t, Sign sign) { return GElt{evec_central(t), 0, false, sign}; }
GElt g_a(int t, Sign sign) { return g_a_power(t, sign, 1); }
GElt g_b(int t, Sign sign) { return GElt{evec_identity(t), 0, true, sign}; }
GElt g_from_evec(const EVec& e, Sign sign) { return GElt{e, 0, false, sign}; }

GElt g_a_power(int t, Sign sign, long n) {
  check_extraspecial_t(t);
  const int half = 2 * t;
  GElt r = g_identity(t, sign);
  if (sign == Sign::plus) {
    r.k = static_cast<std::uint8_t>(mod(n, half));
  } else {
    int full = mod(n, 2 * half);
    if (full >= half) {
      full -= half;
      r.e.z = true;
    }
    r.k = static_cast<std::uint8_t>(full);
  }
  return r;
}

GElt g_mul(const GElt& p, const GElt& q) {
  if (p.e.t != q.e.t || p.sign != q.sign) {
    throw std::invalid_argument("GElt parameter mismatch");
  }
  const int t = p.e.t;
  // (e1 a^k1 b^b1)(e2 a^k2 b^b2): move e2 left past d = a^k1 b^b1 using
  // d e2 = e2^(d^-1) d with d^-1 = b^b1 a^-k1.
  EVec moved = q.e;
  if (p.beta) moved = conj_by_b(moved);
  moved = conj_by_a(moved, p.sign, -static_cast<int>(p.k));
  GElt r;
  r.sign = p.sign;
  r.e = evec_mul(p.e, moved);
  // b a^k2 = a^-k2 b.
  long exponent = static_cast<long>(p.k) + (p.beta ? -1L : 1L) * static_cast<long>(q.k);
  GElt apow = g_a_power(t, p.sign, exponent);
  r.k = apow.k;
  r.e.z = r.e.z ^ apow.e.z;
  r.beta = p.beta ^ q.beta;
  return r;
}

GElt g_inv(const GElt& p) {
  const int t = p.e.t;
  GElt d = g_a_power(t, p.sign, -static_cast<long>(p.k));
  if (p.beta) d = g_mul(g_b(t, p.sign), d);
  return g_mul(d, g_from_evec(evec_inv(p.e), p.sign));
}

GElt g_pow(const GElt& p, long n) {
  GElt base = n < 0 ? g_inv(p) : p;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  GElt r = g_identity(p.e.t, p.sign);
  while (e) {
    if (e & 1) r = g_mul(r, base);
    base = g_mul(base, base);
    e >>= 1;
  }
  return r;
}

GElt g_conj(const GElt& p, const GElt& q) { return g_mul(g_mul(g_inv(q), p), q); }

std::uint64_t g_order(const GElt& p) {
  const GElt id = g_identity(p.e.t, p.sign);
  GElt x = p;
  std::uint64_t n = 1;
  while (!(x == id)) {
    x = g_mul(x, p);
    ++n;
  }
  return n;
}

std::string to_word(const GElt& g) {
  std::vector<std::string> parts;
  for (int i = 0; i < 2 * g.e.t; ++i) {
    if (g.e.v >> i & 1) parts.push_back("x" + std::to_string(i));
  }
  if (g.e.z) parts.emplace_back("z");
  if (g.k == 1) parts.emplace_back("a");
  if (g.k > 1) parts.push_back("a^" + std::to_string(g.k));
  if (g.beta) parts.emplace_back("b");
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

GElt parse_word(std::string_view word, int t, Sign sign) {
  GElt r = g_identity(t, sign);
  std::size_t pos = 0;
  while (pos <= word.size()) {
    std::size_t star = word.find('*', pos);
    std::string_view tok =
        word.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw std::invalid_argument("empty factor in word");
    auto parse_int = [](std::string_view s) {
      if (s.empty()) throw std::invalid_argument("missing number in word");
      bool neg = s.front() == '-';
      if (neg) s.remove_prefix(1);
      if (s.empty()) throw std::invalid_argument("missing number in word");
      long v = 0;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw std::invalid_argument("bad number in word");
        }
        v = v * 10 + (c - '0');
      }
      return neg ? -v : v;
    };
    GElt factor;
    if (tok == "1") {
      factor = g_identity(t, sign);
    } else if (tok == "z") {
      factor = g_z(t, sign);
    } else if (tok == "b") {
      factor = g_b(t, sign);
    } else if (tok == "a") {
      factor = g_a(t, sign);
    } else if (tok.substr(0, 2) == "a^") {
      factor = g_a_power(t, sign, parse_int(tok.substr(2)));
    } else if (tok.front() == 'x') {
      factor = g_x(t, sign, static_cast<int>(parse_int(tok.substr(1))));
    } else {
      throw std::invalid_argument("unknown factor in word: " + std::string(tok));
    }
    r = g_mul(r, factor);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return r;
}

std::uint64_t extraspecial_group_order(int t) {
  check_extraspecial_t(t);
  return static_cast<std::uint64_t>(t) << (2 * t + 3);
}

std::vector<GElt> enumerate_group(int t, Sign sign) {
  check_extraspecial_t(t);
  if (t > 4) throw std::length_error("enumerate_group is limited to t <= 4");
  std::vector<GElt> out;
  out.reserve(extraspecial_group_order(t));
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << (2 * t)); ++v) {
    for (int z = 0; z < 2; ++z) {
      for (int k = 0; k < 2 * t; ++k) {
        for (int beta = 0; beta < 2; ++beta) {
          out.push_back(GElt{EVec{static_cast<std::uint8_t>(t), v, z != 0},
                             static_cast<std::uint8_t>(k), beta != 0, sign});
        }
      }
    }
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> element_order_census(int t, Sign sign) {
  std::map<std::uint64_t, std::uint64_t> census;
  for (const auto& g : enumerate_group(t, sign)) ++census[g_order(g)];
  return census;
}

SubgroupH make_subgroup_h(int t, Sign sign) {
  check_extraspecial_t(t);
  SubgroupH h{t, sign, {}};
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << t); ++v) {
    for (int beta = 0; beta < 2; ++beta) {
      h.elements.push_back(
          GElt{EVec{static_cast<std::uint8_t>(t), v, false}, 0, beta != 0, sign});
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

bool double_coset_contains(const SubgroupH& h, const GElt& mid, const GElt& probe) {
  // probe = h1^mid * h2  <=>  (h1^mid)^-1 * probe lies in H.
  const GElt mid_inv = g_inv(mid);
  for (const auto& h1 : h.elements) {
    GElt conj = g_mul(g_mul(mid_inv, h1), mid);
    GElt rest = g_mul(g_inv(conj), probe);
    if (std::binary_search(h.elements.begin(), h.elements.end(), rest)) return true;
  }
  return false;
}

}  // namespace tetrasym
