#pragma once

// Job orchestration behind the command line tool.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hkr/resolvent.hpp"
#include "json.hpp"

namespace hkr {

enum class CheckLevel { Fast, Full };

struct JobConfig {
  std::string input;              // algebra presentation file
  std::optional<std::string> complex;  // twisted complex JSON for the chern task
  Window window{4, 6};
  std::set<std::string> tasks;
  std::string out;                // empty: standard output
  int threads = 1;
  CheckLevel check_level = CheckLevel::Fast;
  bool timings = true;
  std::uint64_t seed = 1;
};

/// Every task, in the order the pipeline runs them.
const std::vector<std::string>& task_names();

/// Throws Error on a window below (1, 1), an empty or unknown task set, or threads < 1.
void validate(const JobConfig& config);

struct JobResult {
  nlohmann::ordered_json report;
  bool passed = true;
};

std::string read_file(const std::string& path);

/// Reads the input files named in `config` and runs the job.
JobResult run(const JobConfig& config);
JobResult run(const JobConfig& config, const AlgebraPresentation& algebra,
              const std::optional<std::string>& complex_json = std::nullopt);

}  // namespace hkr
