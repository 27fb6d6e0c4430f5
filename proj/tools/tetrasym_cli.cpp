// tetrasym: generate family members, export graphs, verify claimed properties,
// tabulate stabiliser growth.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
// or input/output errors.

#include <bit>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tetrasym/families.hpp"
#include "tetrasym/graph_io.hpp"
#include "tetrasym/verification.hpp"

using namespace tetrasym;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t max_vertices() {
  const char* env = std::getenv("TETRASYM_MAX_VERTICES");
  if (env == nullptr || *env == '\0') return 100'000;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("TETRASYM_MAX_VERTICES is not a number: ") + env);
  }
}

void check_size(const FamilySpec& spec, bool allow_large) {
  std::uint64_t n = expected_properties(spec).vertex_count;
  if (!allow_large && n > max_vertices()) {
    throw UsageError(spec.to_string() + " has " + std::to_string(n) +
                     " vertices, above the limit; raise TETRASYM_MAX_VERTICES or pass --allow-large");
  }
}

FamilySpec parse_spec(const std::string& text) {
  try {
    return FamilySpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + out_path + " for writing");
  out << text;
  if (!out.flush()) throw UsageError("failed writing " + out_path);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<Family> parse_families(const std::string& text) {
  std::vector<Family> out;
  for (const auto& name : split_list(text)) {
    if (name == "wreath") {
      out.push_back(Family::wreath);
    } else if (name == "crs" || name == "praeger_xu") {
      out.push_back(Family::praeger_xu);
    } else if (name == "gamma") {
      out.push_back(Family::gamma_plus);
      out.push_back(Family::gamma_minus);
    } else if (name == "gamma_plus") {
      out.push_back(Family::gamma_plus);
    } else if (name == "gamma_minus") {
      out.push_back(Family::gamma_minus);
    } else if (name == "delta") {
      out.push_back(Family::delta);
    } else {
      throw UsageError("unknown family '" + name + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tetravalent arc-transitive graph families: generate and verify"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string format = "edges";
  std::string out_path;
  std::string checks;
  bool allow_large = false;
  int threads = 1;
  int max_t = 6;
  int max_r = 8;
  std::string families;

  auto* generate = app.add_subcommand("generate", "write a family member's graph");
  generate->add_option("spec", spec_text, "family member, e.g. gamma:t=3,sign=minus")->required();
  generate->add_option("--format", format, "edges, dot or json")
      ->check(CLI::IsMember({"edges", "dot", "json"}));
  generate->add_option("--out", out_path, "output file (default stdout)");
  generate->add_flag("--allow-large", allow_large, "unlock delta m=3, gamma t>6 and the size guard");

  auto* verify = app.add_subcommand("verify", "check a family member against its claimed properties");
  verify->add_option("spec", spec_text, "family member")->required();
  verify->add_option("--checks", checks, "comma-separated subset of checks");
  verify->add_option("--out", out_path, "JSON report file (default stdout)");
  verify->add_flag("--allow-large", allow_large, "unlock delta m=3, gamma t>6 and the size guard");

  auto* matrix = app.add_subcommand("matrix", "verify the whole parameter matrix");
  matrix->add_option("--max-t", max_t, "largest t for the Gamma family")->check(CLI::Range(2, 10));
  matrix->add_option("--max-r", max_r, "largest r for W_r and C(r,s)")->check(CLI::Range(3, 20));
  matrix->add_option("--families", families, "comma-separated: wreath,crs,gamma,gamma_plus,gamma_minus,delta");
  matrix->add_option("--checks", checks, "comma-separated subset of checks");
  matrix->add_option("--threads", threads, "family members verified in parallel")->check(CLI::Range(1, 256));
  matrix->add_option("--out", out_path, "JSON report file (default stdout)");
  matrix->add_flag("--allow-large", allow_large, "allow max-t above 6");

  auto* growth = app.add_subcommand("growth", "CSV of vertex and stabiliser orders along the Gamma and C(2t,t) families");
  growth->add_option("--max-t", max_t, "largest t")->check(CLI::Range(2, 10));
  growth->add_option("--out", out_path, "CSV file (default stdout)");
  growth->add_flag("--allow-large", allow_large, "allow max-t above 6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*generate) {
      FamilySpec spec = parse_spec(spec_text);
      check_size(spec, allow_large);
      FamilyGraph fg = build_family(spec, allow_large);
      emit(format_graph(fg.graph, parse_graph_format(format)), out_path);
      return 0;
    }
    if (*verify) {
      FamilySpec spec = parse_spec(spec_text);
      check_size(spec, allow_large);
      VerificationReport report;
      try {
        report = cmd_verify(spec, split_list(checks), allow_large);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      emit(report.to_json().dump(2) + "\n", out_path);
      return report.overall() ? 0 : 1;
    }
    if (*matrix) {
      if (max_t > 6 && !allow_large) throw UsageError("--max-t above 6 needs --allow-large");
      MatrixOptions options;
      options.max_t = max_t;
      options.max_r = max_r;
      options.families = parse_families(families);
      options.checks = split_list(checks);
      options.threads = threads;
      options.allow_large = allow_large;
      const auto& known = all_check_names();
      for (const auto& c : options.checks) {
        if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("unknown check '" + c + "'");
      }
      MatrixResult result = cmd_matrix(options);
      emit(result.to_json().dump(2) + "\n", out_path);
      return result.overall() ? 0 : 1;
    }
    if (*growth) {
      if (max_t > 6 && !allow_large) throw UsageError("--max-t above 6 needs --allow-large");
      std::ostringstream csv;
      csv << "family,t,vertices,stabiliser_order,log2_stabiliser_order\n";
      auto row = [&](const std::string& name, int t, const FamilyGraph& f) {
        std::uint64_t gv = f.group_order / f.graph.order();
        csv << name << "," << t << "," << f.graph.order() << "," << gv << "," << std::bit_width(gv) - 1 << "\n";
      };
      for (int t = 2; t <= max_t; ++t) {
        row("gamma_plus", t, gamma(t, Sign::plus));
        row("gamma_minus", t, gamma(t, Sign::minus));
        row("crs_2t_t", t, praeger_xu_coset(2 * t, t));
      }
      emit(csv.str(), out_path);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
