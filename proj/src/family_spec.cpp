#include "tetrasym/family_spec.hpp"

#include <charconv>
#include <stdexcept>

namespace tetrasym {

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  }
  return value;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

int FamilySpec::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing parameter " + key);
  return it->second;
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  bool gamma = false;
  if (name == "wreath") {
    spec.family = Family::wreath;
  } else if (name == "crs" || name == "praeger_xu") {
    spec.family = Family::praeger_xu;
  } else if (name == "gamma") {
    gamma = true;
  } else if (name == "delta") {
    spec.family = Family::delta;
  } else {
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  }
  std::optional<bool> plus;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
      }
      std::string key(item.substr(0, eq));
      std::string_view value = item.substr(eq + 1);
      if (gamma && key == "sign") {
        if (value == "plus" || value == "+") {
          plus = true;
        } else if (value == "minus" || value == "-") {
          plus = false;
        } else {
          throw std::invalid_argument("sign must be plus or minus");
        }
      } else {
        if (spec.params.contains(key)) throw std::invalid_argument("repeated parameter " + key);
        spec.params[key] = parse_int(value);
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (gamma) {
    if (!plus) throw std::invalid_argument("gamma needs sign=plus or sign=minus");
    spec.family = *plus ? Family::gamma_plus : Family::gamma_minus;
  }
  spec.validate();
  return spec;
}

void FamilySpec::validate() const {
  auto expect_keys = [&](std::initializer_list<const char*> keys) {
    if (params.size() != keys.size()) throw std::invalid_argument("wrong parameter set");
    for (const char* k : keys) {
      if (!params.contains(k)) throw std::invalid_argument(std::string("missing parameter ") + k);
    }
  };
  switch (family) {
    case Family::wreath:
      expect_keys({"r"});
      if (param("r") < 3) throw std::invalid_argument("wreath needs r >= 3");
      break;
    case Family::praeger_xu: {
      expect_keys({"r", "s"});
      int r = param("r"), s = param("s");
      if (r < 3 || s < 1 || s > r - 1) throw std::invalid_argument("crs needs r >= 3, 1 <= s <= r-1");
      if (r > 20) throw std::invalid_argument("crs is limited to r <= 20");
      break;
    }
    case Family::gamma_plus:
    case Family::gamma_minus:
      expect_keys({"t"});
      if (param("t") < 2 || param("t") > 10) throw std::invalid_argument("gamma needs 2 <= t <= 10");
      break;
    case Family::delta:
      expect_keys({"m"});
      if (param("m") < 2 || param("m") > 4) throw std::invalid_argument("delta needs 2 <= m <= 4");
      break;
  }
}

std::string FamilySpec::to_string() const {
  switch (family) {
    case Family::wreath:
      return "wreath:r=" + std::to_string(param("r"));
    case Family::praeger_xu:
      return "crs:r=" + std::to_string(param("r")) + ",s=" + std::to_string(param("s"));
    case Family::gamma_plus:
      return "gamma:t=" + std::to_string(param("t")) + ",sign=plus";
    case Family::gamma_minus:
      return "gamma:t=" + std::to_string(param("t")) + ",sign=minus";
    case Family::delta:
      return "delta:m=" + std::to_string(param("m"));
  }
  return {};
}

FamilySpec wreath_spec(int r) { return FamilySpec::parse("wreath:r=" + std::to_string(r)); }
FamilySpec praeger_xu_spec(int r, int s) {
  return FamilySpec::parse("crs:r=" + std::to_string(r) + ",s=" + std::to_string(s));
}
FamilySpec gamma_spec(int t, bool plus) {
  return FamilySpec::parse("gamma:t=" + std::to_string(t) + (plus ? ",sign=plus" : ",sign=minus"));
}
FamilySpec delta_spec(int m) { return FamilySpec::parse("delta:m=" + std::to_string(m)); }

ExpectedProperties expected_properties(const FamilySpec& spec) {
  ExpectedProperties e;
  switch (spec.family) {
    case Family::wreath: {
      int r = spec.param("r");
      e.vertex_count = 2ULL * static_cast<std::uint64_t>(r);
      e.stabiliser_order = 1ULL << r;
      if (r >= 4) e.girth = 4;
      if (r % 2 == 0) e.bipartite = true;
      e.locally_d4 = true;
      break;
    }
    case Family::praeger_xu: {
      int r = spec.param("r"), s = spec.param("s");
      e.vertex_count = static_cast<std::uint64_t>(r) << s;
      e.stabiliser_order = 1ULL << (r - s + 1);
      // r = 3 gives W_3 and C(3, 2), which contain triangles.
      if (r >= 4) e.girth = 4;
      if (r % 2 == 0) e.bipartite = true;
      // For s = r-1 the stabiliser has order 4, too small to induce D_4.
      if (s <= r - 2) e.locally_d4 = true;
      break;
    }
    case Family::gamma_plus:
    case Family::gamma_minus: {
      int t = spec.param("t");
      bool plus = spec.family == Family::gamma_plus;
      e.vertex_count = static_cast<std::uint64_t>(t) << (t + 2);
      e.stabiliser_order = 1ULL << (t + 1);
      e.girth = (plus && t == 2) ? 4 : (plus && t == 3) ? 6 : 8;
      e.bipartite = true;
      e.locally_d4 = true;
      break;
    }
    case Family::delta: {
      int m = spec.param("m");
      e.vertex_count = factorial(4 * m) >> (2 * m);
      e.stabiliser_order = 1ULL << (2 * m);
      e.bipartite = false;
      break;
    }
  }
  return e;
}

}  // namespace tetrasym
