#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tetrasym/family_spec.hpp"

namespace tetrasym {

enum class Source { claimed, derived };
std::string to_string(Source s);

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json actual;
  Source source = Source::claimed;
  bool pass = false;
  std::int64_t millis = 0;
  std::string note;
};

struct SkippedCheck {
  std::string name;
  std::string reason;
};

struct VerificationReport {
  FamilySpec spec;
  std::vector<Check> checks;
  std::vector<SkippedCheck> skipped;
  /// Computed values that carry no claim, such as the girth of W_3.
  nlohmann::json observations = nlohmann::json::object();

  bool overall() const;
  /// Adds the top-level "schema": 1 field.
  nlohmann::json to_json() const;
  /// Without the schema field, for embedding in a matrix report.
  nlohmann::json body_json() const;
};

inline constexpr int kReportSchema = 1;

/// Every check name accepted by cmd_verify, in run order.
const std::vector<std::string>& all_check_names();

/// Checks above this vertex count that need a stabiliser chain on the
/// vertex action, or an isomorphism or automorphism search, are skipped.
inline constexpr std::size_t kChainMaxVertices = 5000;

/// Runs the selected checks (all when `checks` is empty). Throws
/// std::invalid_argument on unknown check names.
VerificationReport cmd_verify(const FamilySpec& spec, const std::vector<std::string>& checks = {},
                              bool allow_large = false);

struct MatrixOptions {
  int max_t = 6;
  int max_r = 8;
  /// Restrict to these families; empty means all.
  std::vector<Family> families;
  std::vector<std::string> checks;
  int threads = 1;
  bool allow_large = false;
};

/// The specs the matrix visits, in report order.
std::vector<FamilySpec> matrix_specs(const MatrixOptions& options);

struct MatrixResult {
  std::vector<VerificationReport> reports;
  bool overall() const;
  nlohmann::json to_json() const;
};

/// Verifies every matrix spec, in parallel across specs when threads > 1.
/// The report order does not depend on the thread count.
MatrixResult cmd_matrix(const MatrixOptions& options);

}  // namespace tetrasym
