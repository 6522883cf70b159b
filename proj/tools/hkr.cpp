#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hkr/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hochschild homology of weighted-homogeneous algebras through the affine HKR pipeline"};
  hkr::JobConfig config;
  std::vector<std::string> tasks;
  std::string level = "fast";
  std::string complex;
  bool omit_timings = false;

  app.add_option("-i,--input", config.input, "algebra presentation file")->required();
  app.add_option("-N,--max-degree", config.window.max_degree, "largest homological degree")->default_val(4);
  app.add_option("-W,--max-weight", config.window.max_weight, "largest weight")->default_val(6);
  app.add_option("-t,--tasks", tasks, "comma separated tasks, or 'all'")->delimiter(',')->default_str("all");
  app.add_option("-o,--out", config.out, "report path, standard output when omitted");
  app.add_option("-j,--threads", config.threads, "worker threads")->default_val(1);
  app.add_option("--check-level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}))->default_val("fast");
  app.add_option("--complex", complex, "twisted complex JSON for the chern task");
  app.add_option("--seed", config.seed, "seed for randomized checks")->default_val(1);
  app.add_flag("--omit-timings", omit_timings, "leave timings out of the report");
  CLI11_PARSE(app, argc, argv);

  if (tasks.empty() || (tasks.size() == 1 && tasks[0] == "all"))
    config.tasks.insert(hkr::task_names().begin(), hkr::task_names().end());
  else
    config.tasks.insert(tasks.begin(), tasks.end());
  config.check_level = level == "full" ? hkr::CheckLevel::Full : hkr::CheckLevel::Fast;
  if (!complex.empty()) config.complex = complex;
  config.timings = !omit_timings;

  hkr::JobResult result;
  try {
    result = hkr::run(config);
  } catch (const std::exception& e) {
    std::cerr << "hkr: " << e.what() << "\n";
    return 2;
  }
  const std::string text = result.report.dump(2) + "\n";
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "hkr: cannot write '" << config.out << "'\n";
      return 2;
    }
  }
  if (!result.passed) std::cerr << "hkr: verification failed\n";
  return result.passed ? 0 : 1;
}
