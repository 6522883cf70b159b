#pragma once

// Randomized structural checks of the pipeline's algebraic identities.

#include <cstdint>
#include <string>
#include <vector>

#include "hkr/chern.hpp"
#include "hkr/models.hpp"

namespace hkr {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct PropertyOptions {
  int cases = 100;
  std::uint64_t seed = 1;
  int min_degree = -3;  // random elements are drawn from degrees [min_degree, 0]
  int max_weight = 4;   // and weights [0, max_weight], clipped to the window
};

/// Names of every property in the order `run_properties` reports them.
std::vector<std::string> property_names();

std::vector<PropertyResult> run_properties(const Models& models, const PropertyOptions& options = {});

std::vector<std::string> chern_property_names();

/// Identities of the Chern character and semiregularity map of `F`, a twisted
/// complex over the ring of `cotangent`.
std::vector<PropertyResult> run_chern_properties(const TwistedComplex& F, const CotangentModel& cotangent,
                                                 const PropertyOptions& options = {});

}  // namespace hkr
