#include "hkr/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "hkr/bar_oracle.hpp"
#include "hkr/homology.hpp"
#include "hkr/models.hpp"
#include "hkr/parser.hpp"
#include "hkr/properties.hpp"

namespace hkr {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = {"resolve",    "hochschild", "decompose", "verify-phi",
                                                 "verify-psi", "oracle",     "chern"};
  return names;
}

void validate(const JobConfig& config) {
  if (config.window.max_degree < 1) throw Error("max degree must be at least 1");
  if (config.window.max_weight < 1) throw Error("max weight must be at least 1");
  if (config.tasks.empty()) throw Error("no tasks requested");
  for (const auto& t : config.tasks)
    if (std::find(task_names().begin(), task_names().end(), t) == task_names().end())
      throw Error("unknown task '" + t + "'");
  if (config.threads < 1) throw Error("threads must be at least 1");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw Error("cannot read '" + path + "'");
  return text.str();
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(Json* timings) : timings_(timings) {}
  template <class F>
  auto time(const std::string& key, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(body())>) {
      body();
      record(key, start);
    } else {
      auto value = body();
      record(key, start);
      return value;
    }
  }

 private:
  void record(const std::string& key, std::chrono::steady_clock::time_point start) {
    if (!timings_) return;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    (*timings_)[key] = std::round(seconds * 1000.0) / 1000.0;
  }
  Json* timings_;
};

Json table_json(const HomologyTable& table) {
  Json out = Json::array();
  for (const auto& [key, dim] : table) out.push_back({{"n", key.first}, {"w", key.second}, {"dim", dim}});
  return out;
}

Json algebra_json(const AlgebraPresentation& algebra) {
  Json vars = Json::array();
  for (const auto& v : algebra.ring->variables()) vars.push_back({{"name", v.name}, {"weight", v.weight}});
  Json rels = Json::array();
  for (const auto& f : algebra.relations) rels.push_back(algebra.ring->format(f));
  return {{"variables", vars}, {"relations", rels}};
}

Json resolvent_json(const Resolvent& res) {
  const Gca& R = *res.R;
  Json vars = Json::array();
  for (int id = res.base_size(); id < static_cast<int>(R.size()); ++id) {
    const Variable& v = R.variable(id);
    vars.push_back({{"name", v.name}, {"degree", v.degree}, {"weight", v.weight}, {"d", R.format(R.differential_of(id))}});
  }
  return {{"variables", vars}};
}

Json properties_json(const std::vector<PropertyResult>& results, bool& passed) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json entry = {{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}};
    if (!r.first_failure.empty()) entry["first_failure"] = r.first_failure;
    if (!r.passed()) passed = false;
    out.push_back(entry);
  }
  return out;
}

Json iso_json(const IsoReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(f);
  return {{"passed", report.passed()}, {"bidegrees", report.bidegrees.size()}, {"failures", failures}};
}

Json composite_json(const CompositeReport& report) {
  Json rows = Json::array();
  for (const auto& b : report.bidegrees)
    if (!b.identity)
      rows.push_back({{"n", b.n}, {"w", b.w}, {"dim", b.dim}, {"defect_rank", b.defect_rank},
                      {"homology_defect", b.homology_defect}});
  return {{"identity_on_chains", report.identity_on_chains()},
          {"identity_on_homology", report.identity_on_homology()},
          {"deviations", rows}};
}

bool wants(const JobConfig& c, const char* task) { return c.tasks.count(task) > 0; }

}  // namespace

JobResult run(const JobConfig& config) {
  validate(config);
  const AlgebraPresentation algebra = parse_algebra(read_file(config.input));
  std::optional<std::string> complex;
  if (config.complex) complex = read_file(*config.complex);
  return run(config, algebra, complex);
}

JobResult run(const JobConfig& config, const AlgebraPresentation& algebra,
              const std::optional<std::string>& complex_json) {
  validate(config);
  validate(algebra);
  const Window& window = config.window;
  const int threads = config.threads;
  JobResult result;
  Json& report = result.report;
  Json timings = Json::object();
  Stopwatch clock(config.timings ? &timings : nullptr);
  const auto start = std::chrono::steady_clock::now();

  report["algebra"] = algebra_json(algebra);
  report["window"] = {{"max_degree", window.max_degree}, {"max_weight", window.max_weight}};
  report["tasks"] = Json::array();
  for (const auto& t : task_names())
    if (wants(config, t.c_str())) report["tasks"].push_back(t);

  Json checks = {{"phi_iso", nullptr},          {"psi_iso", nullptr},  {"phi_psi_identity", nullptr},
                 {"properties", Json::array()}, {"oracle_match", nullptr}, {"sum_rule", nullptr},
                 {"resolvent_acyclic", nullptr}, {"chern", nullptr}};
  bool& passed = result.passed;

  const bool verify = wants(config, "verify-phi") || wants(config, "verify-psi");
  const bool need_hh = wants(config, "hochschild") || verify;
  const bool need_cot = wants(config, "decompose") || wants(config, "chern") || verify;

  // The full bundle only when a map is verified; otherwise the pieces a task needs.
  std::unique_ptr<Models> models;
  std::optional<Resolvent> resolvent;
  std::unique_ptr<Enveloping> env;
  std::unique_ptr<AcyclicAlgebra> acyclic;
  std::optional<HochschildModel> hochschild;
  std::optional<CotangentModel> cotangent;
  const bool need_resolvent = need_hh || need_cot || wants(config, "resolve");
  if (verify) {
    models = clock.time("models", [&] { return std::make_unique<Models>(algebra, window); });
    resolvent = models->resolvent;
    hochschild = models->hochschild;
    cotangent = models->cotangent;
  } else if (need_resolvent) {
    resolvent = clock.time("resolve", [&] { return koszul_tate_resolve(algebra, window); });
    if (need_hh)
      clock.time("models", [&] {
        env = std::make_unique<Enveloping>(enveloping(*resolvent));
        acyclic = std::make_unique<AcyclicAlgebra>(*env);
        hochschild = hochschild_model(*acyclic);
      });
    if (need_cot) cotangent = cotangent_model(resolvent->R);
  }

  if (wants(config, "resolve")) {
    report["resolvent"] = resolvent_json(*resolvent);
    const HomologyTable r = clock.time("resolvent_check", [&] { return homology_dims(*resolvent->R, window, threads); });
    const oracle::WeightedQuotient quotient(algebra, window.max_weight);
    bool acyclic_ok = true;
    for (const auto& [key, dim] : r) {
      const int expected = key.first == 0 ? quotient.dimension(key.second) : 0;
      if (dim != expected) acyclic_ok = false;
    }
    checks["resolvent_acyclic"] = acyclic_ok;
    if (!acyclic_ok) passed = false;
  }

  HomologyTable hh;
  if (need_hh) {
    hh = clock.time("hochschild", [&] { return homology_dims(*hochschild->H, window, threads); });
    if (wants(config, "hochschild")) report["hh"] = table_json(hh);
  }

  if (wants(config, "decompose")) {
    const DecompositionTable parts = clock.time("decompose", [&] { return decompose(*cotangent, window, threads); });
    Json rows = Json::array();
    for (const auto& [key, dim] : parts) {
      const auto& [n, w, p] = key;
      rows.push_back({{"n", n}, {"w", w}, {"p", p}, {"dim", dim}});
    }
    report["decomposition"] = rows;
    if (need_hh) {
      const bool ok = sum_rule_violations(parts, hh).empty();
      checks["sum_rule"] = ok;
      if (!ok) passed = false;
    }
  }

  Json maps = Json::object();
  if (wants(config, "verify-phi")) {
    const IsoReport iso = clock.time("verify_phi", [&] { return verify_iso(models->decomposition, window, threads); });
    checks["phi_iso"] = iso.passed();
    maps["phi"] = iso_json(iso);
    if (!iso.passed()) passed = false;
  }
  if (wants(config, "verify-psi")) {
    const IsoReport iso = clock.time("verify_psi", [&] { return verify_iso(models->reverse, window, threads); });
    checks["psi_iso"] = iso.passed();
    maps["psi"] = iso_json(iso);
    if (!iso.passed()) passed = false;
  }
  if (wants(config, "verify-phi") && wants(config, "verify-psi")) {
    clock.time("phi_psi_identity", [&] {
      checks["phi_psi_identity"] = {
          {"psi_after_phi", composite_json(composite_deviation(models->decomposition, models->reverse, window, threads))},
          {"phi_after_psi", composite_json(composite_deviation(models->reverse, models->decomposition, window, threads))}};
    });
  }
  if (verify) {
    PropertyOptions options;
    options.cases = config.check_level == CheckLevel::Full ? 100 : 10;
    options.seed = config.seed;
    checks["properties"] =
        properties_json(clock.time("properties", [&] { return run_properties(*models, options); }), passed);
  }
  if (!maps.empty()) report["maps"] = maps;

  if (wants(config, "oracle")) {
    const HomologyTable bar = clock.time("oracle", [&] { return oracle::bar_homology_table(algebra, window, threads); });
    report["oracle"] = table_json(bar);
    if (need_hh) {
      const bool ok = bar == hh;
      checks["oracle_match"] = ok;
      if (!ok) passed = false;
    }
  }

  if (wants(config, "chern")) {
    clock.time("chern", [&] {
      TwistedComplex F{resolvent->R, {}, {}};
      std::string source;
      if (complex_json) {
        F = parse_twisted_complex(*complex_json, resolvent->R);
        source = "input";
      } else {
        std::vector<Element> generators;
        for (int v = 0; v < resolvent->base_size(); ++v) generators.push_back(Element::generator(v));
        F = koszul_complex(resolvent->R, generators);
        source = "koszul complex of the generators";
      }
      Json basis = Json::array();
      for (const auto& e : F.basis) basis.push_back({{"name", e.name}, {"degree", e.degree}, {"weight", e.weight}});
      Json chern = {{"complex", source}, {"generators", basis}};
      PropertyOptions options;
      options.cases = config.check_level == CheckLevel::Full ? 100 : 10;
      options.seed = config.seed;
      bool ok = true;
      chern["properties"] = properties_json(run_chern_properties(F, *cotangent, options), ok);
      if (check_twisted(F).empty()) {
        const Element ch = chern_character(F, *cotangent);
        const Gca& C = *cotangent->cot;
        std::map<int, Element> parts;
        for (const auto& [m, c] : ch.terms()) parts[cotangent->form_degree(m)].add_term(m, c);
        Json by_degree = Json::array();
        for (const auto& [p, e] : parts) by_degree.push_back({{"p", p}, {"value", C.format(e)}});
        chern["chern_character"] = C.format(ch);
        chern["by_form_degree"] = by_degree;
      }
      checks["chern"] = ok;
      if (!ok) passed = false;
      report["chern"] = chern;
    });
  }

  report["checks"] = checks;
  report["passed"] = passed;
  if (config.timings) {
    timings["total"] =
        std::round(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() * 1000.0) / 1000.0;
    report["timings"] = timings;
  }
  return result;
}

}  // namespace hkr
