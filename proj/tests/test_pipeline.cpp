#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "hkr/parser.hpp"
#include "hkr/pipeline.hpp"

using namespace hkr;
using namespace hkr::testing;

namespace {

JobConfig config_for(std::set<std::string> tasks, Window window) {
  JobConfig c;
  c.tasks = std::move(tasks);
  c.window = window;
  c.timings = false;
  return c;
}

JobConfig all_tasks(Window window) {
  return config_for({task_names().begin(), task_names().end()}, window);
}

// random weighted presentation with homogeneous relations
std::string random_presentation(std::mt19937& gen) {
  std::uniform_int_distribution<int> nvars(1, 3), weight(1, 3), coef(-4, 4), den(1, 3), nrel(0, 2);
  const int n = nvars(gen);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::string text;
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = weight(gen);
    text += "var v" + std::to_string(i) + " weight " + std::to_string(w[static_cast<std::size_t>(i)]) + ";\n";
  }
  const int rels = nrel(gen);
  for (int r = 0; r < rels; ++r) {
    // products v_i^a v_j^b of equal total weight 6
    std::string rel;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int a = 1; a <= 6; ++a) {
          const int rest = 6 - a * w[static_cast<std::size_t>(i)];
          if (rest < 0) continue;
          if (i == j) {
            if (rest != 0) continue;
          } else if (rest == 0 || rest % w[static_cast<std::size_t>(j)] != 0) {
            continue;
          }
          const int c = coef(gen);
          if (c == 0) continue;
          rel += (rel.empty() ? "" : " + ") + std::string("(") + std::to_string(c) + "/" + std::to_string(den(gen)) +
                 ")*v" + std::to_string(i) + "^" + std::to_string(a);
          if (i != j) rel += "*v" + std::to_string(j) + "^" + std::to_string(rest / w[static_cast<std::size_t>(j)]);
        }
    if (!rel.empty()) text += "rel " + rel + ";\n";
  }
  return text;
}

}  // namespace

TEST_CASE("format then parse is the identity on presentations") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string text = random_presentation(gen);
    CAPTURE(text);
    AlgebraPresentation a = parse_algebra(text);
    AlgebraPresentation b = parse_algebra(format_algebra(a));
    CHECK(a == b);
    CHECK(format_algebra(b) == format_algebra(a));
  }
}

TEST_CASE("dual numbers, every task") {
  JobResult r = run(all_tasks({4, 6}), dual_numbers());
  const auto& checks = r.report["checks"];
  CHECK(r.passed);
  CHECK(checks["oracle_match"] == true);
  CHECK(checks["phi_iso"] == true);
  CHECK(checks["psi_iso"] == true);
  CHECK(checks["sum_rule"] == true);
  CHECK(checks["resolvent_acyclic"] == true);
  CHECK(checks["chern"] == true);
  CHECK(checks["phi_psi_identity"].is_object());
  CHECK_FALSE(checks["properties"].empty());
  CHECK_FALSE(r.report.contains("timings"));
  std::map<int, int> totals;
  for (const auto& row : r.report["hh"]) totals[row["n"].get<int>()] += row["dim"].get<int>();
  CHECK(totals == std::map<int, int>{{0, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
}

TEST_CASE("hochschild only produces the dims table") {
  JobResult r = run(config_for({"hochschild"}, {3, 4}), smooth_line());
  CHECK(r.passed);
  CHECK(r.report.contains("hh"));
  for (const char* key : {"decomposition", "oracle", "chern", "resolvent", "maps"}) CHECK_FALSE(r.report.contains(key));
  for (const char* key : {"phi_iso", "psi_iso", "phi_psi_identity", "oracle_match", "sum_rule"})
    CHECK(r.report["checks"][key].is_null());
  for (const auto& row : r.report["hh"]) {
    const int n = row["n"], w = row["w"], dim = row["dim"];
    if (n == 1) CHECK(dim == (w >= 1 ? 1 : 0));
    if (n >= 2) CHECK(dim == 0);
  }
}

TEST_CASE("reruns are byte identical") {
  JobConfig c = all_tasks({3, 5});
  c.check_level = CheckLevel::Full;
  const std::string first = run(c, plane_pair()).report.dump(2);
  const std::string second = run(c, plane_pair()).report.dump(2);
  CHECK(first == second);
}

TEST_CASE("twisted complex input for the chern task") {
  const std::string complex = R"({
    "generators": [{"name": "e0", "degree": 0, "weight": 0},
                   {"name": "e1", "degree": -1, "weight": 1},
                   {"name": "u", "degree": -2, "weight": 2}],
    "differential": [["0", "x", "-z1_2_0"], ["0", "0", "x"], ["0", "0", "0"]]})";
  JobResult r = run(config_for({"chern"}, {2, 4}), dual_numbers(), complex);
  CHECK(r.passed);
  CHECK(r.report["chern"]["complex"] == "input");
  CHECK(r.report["checks"]["chern"] == true);

  const std::string broken = R"({
    "generators": [{"name": "e0", "degree": 0, "weight": 0}, {"name": "e1", "degree": -1, "weight": 1}],
    "differential": [["0", "x^2"], ["0", "0"]]})";
  JobResult bad = run(config_for({"chern"}, {2, 4}), dual_numbers(), broken);
  CHECK_FALSE(bad.passed);
  CHECK(bad.report["checks"]["chern"] == false);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(run(config_for({}, {2, 2}), smooth_line()), Error);
  CHECK_THROWS_AS(run(config_for({"hochschild"}, {0, 2}), smooth_line()), Error);
  CHECK_THROWS_AS(run(config_for({"hochschild"}, {2, 0}), smooth_line()), Error);
  CHECK_THROWS_AS(run(config_for({"bogus"}, {2, 2}), smooth_line()), Error);
  JobConfig missing = config_for({"hochschild"}, {2, 2});
  missing.input = "/nonexistent/algebra.alg";
  CHECK_THROWS_AS(run(missing), Error);
}
