#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hkr/bar_oracle.hpp"
#include "hkr/homology.hpp"
#include "hkr/properties.hpp"

using namespace hkr;
using namespace hkr::testing;

namespace {

struct Case {
  const char* name;
  AlgebraPresentation algebra;
  Window window;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void report(int k, bool ok, const std::string& text) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", k, text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string mismatch(const HomologyTable& a, const HomologyTable& b) {
  for (const auto& [key, dim] : a) {
    auto it = b.find(key);
    if (it == b.end() || it->second != dim)
      return " first mismatch at (n, w) = (" + std::to_string(key.first) + ", " + std::to_string(key.second) + ")";
  }
  return a.size() == b.size() ? "" : " tables differ in size";
}

// pipeline HH and bar oracle HH with the time to build and evaluate the pipeline
struct Run {
  HomologyTable hh;
  HomologyTable oracle;
  double seconds = 0;
};

Run compare(const Models& m, double model_seconds) {
  Run r;
  const auto start = std::chrono::steady_clock::now();
  r.hh = homology_dims(*m.hochschild.H, m.window);
  r.oracle = oracle::bar_homology_table(m.algebra, m.window);
  r.seconds = model_seconds + seconds_since(start);
  return r;
}

TwistedComplex residue_field(const Resolvent& res) {
  TwistedComplex F{res.R, {{"e0", 0, 0}, {"e1", -1, 1}, {"u", -2, 2}}, zero_matrix(3)};
  F.differential[0][1] = Element::generator(0);
  F.differential[1][2] = Element::generator(0);
  F.differential[0][2] = -Element::generator(res.R->id("z1_2_0"));
  return F;
}

TwistedComplex generators_koszul(const Resolvent& res) {
  std::vector<Element> gens;
  for (int v = 0; v < res.base_size(); ++v) gens.push_back(Element::generator(v));
  return koszul_complex(res.R, gens);
}

}  // namespace

int main() {
  std::vector<Case> cases = {{"Q[x]", smooth_line(), {4, 6}},
                             {"Q[x]/(x^2)", dual_numbers(), {4, 6}},
                             {"Q[x,y]/(x^2,xy)", plane_pair(), {3, 6}}};
  std::vector<std::unique_ptr<Models>> models;
  std::vector<Run> runs;
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    models.push_back(std::make_unique<Models>(c.algebra, c.window));
    runs.push_back(compare(*models.back(), seconds_since(start)));
  }

  {
    const Run& r = runs[0];
    const bool ok = r.hh == r.oracle && r.seconds < 10.0;
    report(1, ok, "Q[x] window (4,6): HH equals bar oracle at " + std::to_string(r.hh.size()) + " bidegrees in " +
                      std::to_string(r.seconds) + " s (limit 10 s)" + mismatch(r.hh, r.oracle));
  }
  {
    const Run& r = runs[1];
    std::map<int, int> totals;
    for (const auto& [key, dim] : r.hh) totals[key.first] += dim;
    const std::map<int, int> expected = {{0, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}};
    std::string shown;
    for (const auto& [n, t] : totals) shown += (shown.empty() ? "" : ",") + std::to_string(t);
    const bool ok = totals == expected && r.hh == r.oracle && r.seconds < 30.0;
    report(2, ok, "dual numbers window (4,6): totals (" + shown + "), expected (2,1,1,1,1), oracle agreement per (n,w) " +
                      (r.hh == r.oracle ? "yes" : "no") + " in " + std::to_string(r.seconds) + " s (limit 30 s)");
  }
  {
    const Run& r = runs[2];
    const Gca& R = *models[2]->resolvent.R;
    bool found = false;
    const Element x = Element::generator(0), y = Element::generator(1);
    const Element y1 = Element::generator(R.id("z1_2_0")), y2 = Element::generator(R.id("z1_2_1"));
    const Element target = R.mul(x, y2) - R.mul(y, y1);
    for (int v = 0; v < static_cast<int>(R.size()); ++v) {
      const Variable& z = R.variable(v);
      if (z.degree == -2 && z.weight == 3 && R.differential_of(v) == target) found = true;
    }
    const bool ok = r.hh == r.oracle && r.seconds < 120.0 && found;
    report(3, ok, "Q[x,y]/(x^2,xy) window (3,6): pipeline equals oracle " + std::string(r.hh == r.oracle ? "yes" : "no") +
                      ", degree -2 weight 3 variable with d = x*y2 - y*y1 " + (found ? "present" : "missing") +
                      ", in " + std::to_string(r.seconds) + " s (limit 120 s)" + mismatch(r.hh, r.oracle));
  }
  {
    bool ok = true;
    std::string text;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      IsoReport iso = verify_iso(models[i]->decomposition, cases[i].window);
      ok = ok && iso.passed();
      text += std::string(i ? "; " : "") + cases[i].name + " " + std::to_string(iso.bidegrees.size()) + " bidegrees " +
              (iso.passed() ? "square, invertible, chain map" : iso.failures.front());
    }
    report(4, ok, "decomposition map per bidegree: " + text);
  }
  {
    bool ok = true;
    std::string text;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      DecompositionTable parts = decompose(models[i]->cotangent, cases[i].window);
      auto bad = sum_rule_violations(parts, runs[i].hh);
      ok = ok && bad.empty();
      text += std::string(i ? "; " : "") + cases[i].name + " " + std::to_string(bad.size()) + " violations";
    }
    report(5, ok, "sum over form degree equals HH dim: " + text);
  }
  {
    bool ok = true;
    int total = 0;
    std::string failed;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      PropertyOptions options;
      options.cases = 100;
      options.seed = 2024 + i;
      for (const auto& p : run_properties(*models[i], options)) {
        total += p.cases;
        if (!p.passed() || p.cases < 1) {
          ok = false;
          failed += " " + std::string(cases[i].name) + ":" + p.name + " (" + p.first_failure + ")";
        }
      }
    }
    report(6, ok, "structural suite, " + std::to_string(property_names().size()) + " properties x 3 algebras, " +
                      std::to_string(total) + " cases" + (failed.empty() ? "" : ", failed:" + failed));
  }
  {
    bool ok = true;
    int total = 0;
    std::string failed;
    std::vector<std::pair<std::string, TwistedComplex>> complexes = {
        {"Q[x] koszul", generators_koszul(models[0]->resolvent)},
        {"dual residue field", residue_field(models[1]->resolvent)},
        {"dual koszul", generators_koszul(models[1]->resolvent)},
        {"plane koszul", generators_koszul(models[2]->resolvent)}};
    const std::size_t owner[] = {0, 1, 1, 2};
    for (std::size_t j = 0; j < complexes.size(); ++j) {
      PropertyOptions options;
      options.cases = 100;
      options.seed = 7 + j;
      for (const auto& p : run_chern_properties(complexes[j].second, models[owner[j]]->cotangent, options)) {
        total += p.cases;
        if (!p.passed()) {
          ok = false;
          failed += " " + complexes[j].first + ":" + p.name + " (" + p.first_failure + ")";
        }
      }
    }
    report(7, ok, "Chern suite on " + std::to_string(complexes.size()) + " twisted complexes, " + std::to_string(total) +
                      " cases" + (failed.empty() ? "" : ", failed:" + failed));
  }
  {
    std::string text;
    bool computed = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      try {
        CompositeReport a = composite_deviation(models[i]->decomposition, models[i]->reverse, cases[i].window);
        CompositeReport b = composite_deviation(models[i]->reverse, models[i]->decomposition, cases[i].window);
        std::size_t defect_a = 0, defect_b = 0;
        for (const auto& x : a.bidegrees) defect_a += x.defect_rank;
        for (const auto& x : b.bidegrees) defect_b += x.defect_rank;
        text += std::string(i ? "; " : "") + cases[i].name + " reverse o decomposition " +
                (a.identity_on_chains() ? "identity" : "deviates, total defect rank " + std::to_string(defect_a)) +
                ", decomposition o reverse " +
                (b.identity_on_chains() ? "identity" : "deviates, total defect rank " + std::to_string(defect_b));
      } catch (const std::exception& e) {
        computed = false;
        text += std::string(i ? "; " : "") + cases[i].name + " not computed: " + e.what();
      }
    }
    report(8, computed, "composite probe (reported only): " + text);
  }
  return failures == 0 ? 0 : 1;
}
