#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tetrasym {

enum class Family { wreath, praeger_xu, gamma_plus, gamma_minus, delta };

/// A family member such as "wreath:r=5", "crs:r=6,s=3",
/// "gamma:t=4,sign=minus" or "delta:m=2".
struct FamilySpec {
  Family family = Family::wreath;
  std::map<std::string, int> params;

  int param(const std::string& key) const;

  /// Throws std::invalid_argument on unknown families, missing or unknown
  /// parameters, and values outside the family's range.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  void validate() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec wreath_spec(int r);
FamilySpec praeger_xu_spec(int r, int s);
FamilySpec gamma_spec(int t, bool plus);
FamilySpec delta_spec(int m);

/// Properties a family member is claimed to have; filled from the family
/// definition, then checked against the constructed graph.
struct ExpectedProperties {
  std::uint64_t vertex_count = 0;
  std::uint64_t stabiliser_order = 0;
  std::optional<std::size_t> girth;
  std::optional<bool> bipartite;
  std::optional<bool> locally_d4;
};

ExpectedProperties expected_properties(const FamilySpec& spec);

}  // namespace tetrasym
