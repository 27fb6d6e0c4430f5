#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string command = env + " " + TETRASYM_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("generate edge lists") {
  auto w3 = run("generate wreath:r=3");
  CHECK(w3.status == 0);
  CHECK(line_count(w3.out) == 12);
  auto g2 = run("generate gamma:t=2,sign=minus --format edges");
  CHECK(g2.status == 0);
  CHECK(line_count(g2.out) == 64);
  CHECK(g2.out.rfind("0 ", 0) == 0);
  auto d2 = run("generate delta:m=2");
  CHECK(d2.status == 0);
  CHECK(line_count(d2.out) == 5040);
}

TEST_CASE("generate is deterministic") {
  for (const char* spec : {"gamma:t=3,sign=plus", "crs:r=6,s=3", "delta:m=2"}) {
    auto first = run(std::string("generate ") + spec);
    auto second = run(std::string("generate ") + spec);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("generate formats") {
  auto dot = run("generate wreath:r=4 --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.find("graph") != std::string::npos);
  CHECK(dot.out.find("--") != std::string::npos);
  auto json = run("generate gamma:t=2,sign=plus --format json");
  REQUIRE(json.status == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["n"] == 32);
  CHECK(j["edges"].size() == 64);
  CHECK(j["labels"][0] == "1");

  auto path = std::filesystem::temp_directory_path() / "tetrasym_cli_test.txt";
  auto to_file = run("generate wreath:r=5 --out " + path.string());
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(line_count(contents.str()) == 20);
  std::filesystem::remove(path);
}

TEST_CASE("verify reports") {
  auto ok = run("verify crs:r=6,s=3");
  CHECK(ok.status == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["schema"] == 1);
  CHECK(j["spec"] == "crs:r=6,s=3");
  CHECK(j["overall"] == true);
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("actual"));
    CHECK((c["source"] == "claimed" || c["source"] == "derived"));
    CHECK(c["pass"] == true);
  }
  CHECK(j["skipped"].is_array());

  auto subset = run("verify gamma:t=3,sign=minus --checks counts,girth");
  CHECK(subset.status == 0);
  auto s = nlohmann::json::parse(subset.out);
  CHECK(s["checks"].size() == 2);
  CHECK(s["checks"][1]["actual"] == 8);

  auto failing = run("verify gamma:t=2,sign=minus --checks girth");
  CHECK(failing.status == 1);
  auto f = nlohmann::json::parse(failing.out);
  CHECK(f["overall"] == false);
  CHECK(f["checks"][0]["expected"] == 8);
  CHECK(f["checks"][0]["actual"] == 6);
}

TEST_CASE("matrix") {
  auto m = run("matrix --families wreath,crs --max-r 5 --threads 2");
  CHECK(m.status == 0);
  auto j = nlohmann::json::parse(m.out);
  CHECK(j["overall"] == true);
  CHECK(j["failed_checks"] == 0);
  // W_3..W_5 and C(r, s) for 3 <= r <= 5, 1 <= s < r.
  CHECK(j["reports"].size() == 3 + 2 + 3 + 4);
  auto g = run("matrix --families gamma --max-t 3 --checks girth");
  CHECK(g.status == 1);
  CHECK(nlohmann::json::parse(g.out)["failed_checks"] == 1);
}

TEST_CASE("growth table") {
  auto g = run("growth --max-t 4");
  REQUIRE(g.status == 0);
  CHECK(line_count(g.out) == 1 + 3 * 3);
  CHECK(g.out.find("gamma_minus,3,96,16,4\n") != std::string::npos);
  CHECK(g.out.find("crs_2t_t,4,128,32,5\n") != std::string::npos);
  CHECK(run("growth --max-t 8").status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("generate").status == 2);
  CHECK(run("generate cube:n=3").status == 2);
  CHECK(run("generate wreath:r=2").status == 2);
  CHECK(run("generate wreath:r=4 --format svg").status == 2);
  CHECK(run("verify wreath:r=4 --checks nonsense").status == 2);
  CHECK(run("matrix --max-t 7").status == 2);
  CHECK(run("matrix --families cube").status == 2);
  CHECK(run("generate delta:m=3").status == 2);
  CHECK(run("generate wreath:r=4 --out /nonexistent/dir/file").status == 2);
  CHECK(run("generate gamma:t=2,sign=plus", "TETRASYM_MAX_VERTICES=10").status == 2);
  CHECK(run("generate gamma:t=2,sign=plus --allow-large", "TETRASYM_MAX_VERTICES=10").status == 0);
  CHECK(run("--help").status == 0);
}
