#pragma once

// Homology tables of the models, form-degree decomposition, and per-bidegree
// verification of algebra maps between models.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hkr/atiyah.hpp"
#include "hkr/slice.hpp"

namespace hkr {

/// dim of the form-degree-p summand, keyed by (n, w, p).
using DecompositionTable = std::map<std::tuple<int, int, int>, int>;

DecompositionTable decompose(const CotangentModel& cotangent, const Window& window, int threads = 1);

/// (n, w) pairs where the sum over p differs from `total`.
std::vector<std::pair<int, int>> sum_rule_violations(const DecompositionTable& parts, const HomologyTable& total);

struct BidegreeCheck {
  int n = 0;
  int w = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool chain_map = true;
  bool passed() const { return chain_map && source_dim == target_dim && rank == source_dim; }
};

struct IsoReport {
  std::vector<BidegreeCheck> bidegrees;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// For every (n, w) in the window: the chain-map residual of `map` vanishes on
/// each basis monomial, and its matrix is square of full rank.
IsoReport verify_iso(const AlgebraMap& map, const Window& window, int threads = 1);

struct CompositeBidegree {
  int n = 0;
  int w = 0;
  std::size_t dim = 0;
  bool identity = true;
  std::size_t defect_rank = 0;      // rank(M - I) on chains
  std::size_t homology_defect = 0;  // rank of M - I induced on homology
};

struct CompositeReport {
  std::vector<CompositeBidegree> bidegrees;
  bool identity_on_chains() const;
  bool identity_on_homology() const;
};

/// Deviation of second o first from the identity of first's source, per bidegree.
CompositeReport composite_deviation(const AlgebraMap& first, const AlgebraMap& second, const Window& window,
                                    int threads = 1);

}  // namespace hkr
